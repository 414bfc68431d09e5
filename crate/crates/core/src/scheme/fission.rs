//! Local search for fissions of one relation into parts of prescribed valencies.
//!
//! A partition of `R_r(x)` into ordered parts `P_0, P_1, ...` is *locally consistent* when every
//! part is equitable towards every local class (the parts and the other `R_i(x)`) in the graph
//! of `R_1`. That is the bare necessary condition at one base point.
//!
//! A genuine fission also needs the partition to be fully equitable at every point (every class,
//! not only the parts) and the choices at all points to fit together: `y` in part `a` at `x`
//! exactly when `x` is in part `a` at `y`. Partitions at point 0 that extend to such a global
//! choice are the survivors; an empty survivor list proves that no such fission exists.

use super::AssociationScheme;
use crate::error::{Error, Result};

/// Ordered parts of `R_r(x)`, each sorted ascending.
pub type Partition = Vec<Vec<usize>>;

const MAX_PARTITIONS: u128 = 2_000_000;

#[derive(Clone, Debug)]
pub struct FissionReport {
    pub relation: usize,
    pub sizes: Vec<usize>,
    /// Locally consistent partitions at point 0.
    pub local: Vec<Partition>,
    /// Fully equitable partitions at each point.
    pub equitable_per_point: Vec<usize>,
    /// Partitions at point 0 that extend to a consistent symmetric choice at every point.
    pub survivors: Vec<Partition>,
}

impl FissionReport {
    /// True when the search proves that no fission with these sizes exists.
    pub fn refuted(&self) -> bool {
        self.survivors.is_empty()
    }
}

fn multinomial(sizes: &[usize]) -> u128 {
    let mut total = 0usize;
    let mut acc: u128 = 1;
    for &s in sizes {
        for i in 1..=s {
            total += 1;
            acc = acc * total as u128 / i as u128;
            if acc > MAX_PARTITIONS * 1000 {
                return u128::MAX;
            }
        }
    }
    acc
}

fn partitions(items: &[usize], sizes: &[usize]) -> Vec<Partition> {
    fn rec(rest: &[usize], sizes: &[usize], cur: &mut Partition, out: &mut Vec<Partition>) {
        let Some((&s, tail)) = sizes.split_first() else {
            out.push(cur.clone());
            return;
        };
        let mut pick = Vec::with_capacity(s);
        choose(rest, s, 0, &mut pick, &mut |chosen| {
            let left: Vec<usize> = rest.iter().copied().filter(|z| !chosen.contains(z)).collect();
            cur.push(chosen.to_vec());
            rec(&left, tail, cur, out);
            cur.pop();
        });
    }
    fn choose(items: &[usize], k: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if pick.len() == k {
            f(pick);
            return;
        }
        for i in from..items.len() {
            if items.len() - i < k - pick.len() {
                break;
            }
            pick.push(items[i]);
            choose(items, k, i + 1, pick, f);
            pick.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, sizes, &mut Vec::new(), &mut out);
    out
}

struct Checker<'a> {
    s: &'a AssociationScheme,
    adj: Vec<Vec<usize>>,
}

impl Checker<'_> {
    /// Cell of every point relative to `x`: relation index, or `rank + a` for part `a`.
    fn cells(&self, x: usize, part: &Partition) -> Vec<usize> {
        let rank = self.s.rank();
        let mut cell: Vec<usize> = (0..self.s.n()).map(|z| self.s.relation(x, z)).collect();
        for (a, p) in part.iter().enumerate() {
            for &z in p {
                cell[z] = rank + a;
            }
        }
        cell
    }

    fn equitable(&self, x: usize, part: &Partition, only_parts: bool) -> bool {
        let rank = self.s.rank();
        let ncells = rank + part.len();
        let cell = self.cells(x, part);
        let mut members: Vec<Vec<usize>> = vec![Vec::new(); ncells];
        for (z, &c) in cell.iter().enumerate() {
            members[c].push(z);
        }
        let profile = |y: usize| {
            let mut v = vec![0usize; ncells];
            for &z in &self.adj[y] {
                v[cell[z]] += 1;
            }
            v
        };
        members.iter().enumerate().all(|(c, m)| {
            if (only_parts && c < rank) || m.len() < 2 {
                return true;
            }
            let first = profile(m[0]);
            m[1..].iter().all(|&y| profile(y) == first)
        })
    }
}

fn extend(
    order: &[usize],
    idx: usize,
    cand: &[Vec<Partition>],
    chosen: &mut Vec<Option<usize>>,
    part_of: &mut Vec<Vec<usize>>,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let x = order[idx];
    for (ci, p) in cand[x].iter().enumerate() {
        let fits = p.iter().enumerate().all(|(a, part)| {
            part.iter().all(|&y| chosen[y].is_none() || part_of[y][x] == a)
        });
        if !fits {
            continue;
        }
        chosen[x] = Some(ci);
        for (a, part) in p.iter().enumerate() {
            for &y in part {
                part_of[x][y] = a;
            }
        }
        if extend(order, idx + 1, cand, chosen, part_of) {
            return true;
        }
        chosen[x] = None;
    }
    false
}

/// Searches for splittings of `R_r` into parts with valencies `sizes` (see the module docs).
pub fn fission_feasibility(s: &AssociationScheme, r: usize, sizes: &[usize]) -> Result<FissionReport> {
    if r == 0 || r > s.d() {
        return Err(Error::InvalidParameters(format!("relation {r} is not a non-identity relation")));
    }
    let total: usize = sizes.iter().sum();
    if total != s.valency(r) || sizes.contains(&0) {
        return Err(Error::SizeMismatch { expected: s.valency(r), got: total });
    }
    if multinomial(sizes) > MAX_PARTITIONS {
        return Err(Error::NotApplicable(format!(
            "more than {MAX_PARTITIONS} candidate partitions per point"
        )));
    }
    let n = s.n();
    let checker = Checker { s, adj: (0..n).map(|x| s.neighbors(1, x)).collect() };
    let local: Vec<Partition> =
        partitions(&s.neighbors(r, 0), sizes).into_iter().filter(|p| checker.equitable(0, p, true)).collect();
    let cand: Vec<Vec<Partition>> = (0..n)
        .map(|x| partitions(&s.neighbors(r, x), sizes).into_iter().filter(|p| checker.equitable(x, p, false)).collect())
        .collect();
    let equitable_per_point = cand.iter().map(Vec::len).collect();
    let order: Vec<usize> = (1..n).collect();
    let mut survivors = Vec::new();
    if cand.iter().all(|c| !c.is_empty()) {
        for p in &cand[0] {
            let mut chosen = vec![None; n];
            let mut part_of = vec![vec![usize::MAX; n]; n];
            chosen[0] = Some(0);
            for (a, part) in p.iter().enumerate() {
                for &y in part {
                    part_of[0][y] = a;
                }
            }
            let mut single = cand.clone();
            single[0] = vec![p.clone()];
            if extend(&order, 0, &single, &mut chosen, &mut part_of) {
                survivors.push(p.clone());
            }
        }
    }
    Ok(FissionReport { relation: r, sizes: sizes.to_vec(), local, equitable_per_point, survivors })
}
