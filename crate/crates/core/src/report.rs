//! Text and JSON reports of spectral data and feasibility verdicts.
//!
//! Exact scalars are rendered as strings such as `-1/2 + 1/2*sqrt(5)`.

use std::fmt::Write as _;

use serde::Serialize;

use crate::coherent::CoherentConfiguration;
use crate::error::Result;
use crate::exact::{AlgebraicScalar, FieldMatrix};
use crate::scheme::{partially_metric_order, AssociationScheme, Diagram};
use crate::spectral::{
    classify_cubic_mult3, classify_partially_metric_mult3, diagram_feasibility, eigensystem, godsil_bound, krein,
    light_tail, multiplicity_from_cosines, GodsilVerdict, SpectralData,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A ",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub check: String,
    pub status: Status,
    pub detail: String,
}

impl Verdict {
    pub fn new(check: impl Into<String>, status: Status, detail: impl Into<String>) -> Self {
        Verdict { check: check.into(), status, detail: detail.into() }
    }

    pub fn line(&self) -> String {
        if self.detail.is_empty() {
            format!("[{}] {}", self.status.tag(), self.check)
        } else {
            format!("[{}] {}: {}", self.status.tag(), self.check, self.detail)
        }
    }
}

fn strings(v: &[AlgebraicScalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_rows(m: &FieldMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| strings(m.row(i))).collect()
}

fn field_name(sd: &SpectralData) -> String {
    match &sd.field {
        None => "Q".into(),
        Some(f) => {
            let r: Vec<String> = f.radicands().iter().map(|d| format!("sqrt({d})")).collect();
            format!("Q({})", r.join(", "))
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct KreinTriple {
    pub h: usize,
    pub i: usize,
    pub j: usize,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectralReport {
    pub n: usize,
    pub rank: usize,
    pub valencies: Vec<usize>,
    pub field: String,
    /// Eigenvalue of `R_1` on each idempotent.
    pub theta: Vec<String>,
    pub multiplicities: Vec<usize>,
    pub p: Vec<Vec<String>>,
    pub q: Vec<Vec<String>>,
    /// Nonzero Krein parameters.
    pub krein: Vec<KreinTriple>,
    /// Cosine sequence of each idempotent.
    pub cosines: Vec<Vec<String>>,
    pub verdicts: Vec<Verdict>,
}

impl SpectralReport {
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.status != Status::Fail)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "points {}  rank {}  field {}", self.n, self.rank, self.field).unwrap();
        writeln!(s, "valencies {}", join(&self.valencies)).unwrap();
        writeln!(s, "multiplicities {}", join(&self.multiplicities)).unwrap();
        writeln!(s, "eigenvalues of R_1 {}", self.theta.join(", ")).unwrap();
        write_matrix(&mut s, "P", &self.p);
        write_matrix(&mut s, "Q", &self.q);
        writeln!(s, "Krein parameters (h i j: q^h_ij), nonzero only").unwrap();
        for t in &self.krein {
            writeln!(s, "  {} {} {}: {}", t.h, t.i, t.j, t.value).unwrap();
        }
        writeln!(s, "cosines").unwrap();
        for (j, row) in self.cosines.iter().enumerate() {
            writeln!(s, "  E_{j}: {}", row.join(", ")).unwrap();
        }
        for v in &self.verdicts {
            writeln!(s, "{}", v.line()).unwrap();
        }
        s
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn write_matrix(s: &mut String, name: &str, rows: &[Vec<String>]) {
    writeln!(s, "{name}").unwrap();
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for row in rows {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
        writeln!(s, "  [ {} ]", cells.join("  ")).unwrap();
    }
}

/// Feasibility verdicts for a symmetric scheme with known spectral data.
pub fn scheme_verdicts(s: &AssociationScheme, sd: &SpectralData) -> Vec<Verdict> {
    let r = sd.rank();
    let kt = krein(sd);
    let mut out = Vec::new();
    let neg = kt.negative();
    out.push(Verdict::new(
        "Krein conditions",
        Status::of(neg.is_empty()),
        match neg.first() {
            None => String::new(),
            Some((h, i, j, q)) => format!("q^{h}_{{{i},{j}}} = {q}"),
        },
    ));
    let diag_ok = (0..r).all(|i| {
        (0..r).all(|j| {
            let want = if i == j { sd.multiplicities[j] as i64 } else { 0 };
            *kt.get(0, i, j) == AlgebraicScalar::from_int(want)
        })
    });
    out.push(Verdict::new("q^0_ij = delta_ij m_j", Status::of(diag_ok), ""));
    let eq_ok = (0..r).all(|j| {
        multiplicity_from_cosines(&sd.valencies, &sd.cosines(j), sd.n)
            .is_ok_and(|m| m == AlgebraicScalar::from_int(sd.multiplicities[j] as i64))
    });
    out.push(Verdict::new("m_j sum_i k_i omega_i^2 = n", Status::of(eq_ok), ""));
    if r < 2 {
        return out;
    }
    for j in 1..r {
        let check = format!("multiplicity bound on E_{j}");
        out.push(match godsil_bound(s, sd, j) {
            GodsilVerdict::Holds { k, m, bound, tight } => Verdict::new(
                check,
                Status::Pass,
                format!("k = {k} <= {bound} for m = {m}{}", if tight { " (tight)" } else { "" }),
            ),
            GodsilVerdict::Violated { k, m, bound } => {
                Verdict::new(check, Status::Fail, format!("k = {k} > {bound} for m = {m}"))
            }
            GodsilVerdict::NotApplicable(why) => Verdict::new(check, Status::NotApplicable, why),
        });
        if let Ok(lt) = light_tail(s, sd, j) {
            if lt.is_light_tail {
                out.push(Verdict::new(
                    format!("light tail E_{j}"),
                    Status::of(lt.af_equals_eta_f),
                    format!("theta = {}, eta = {}, AF = eta F {}", lt.theta, lt.eta, if lt.af_equals_eta_f { "holds" } else { "fails" }),
                ));
            }
        }
    }
    let cubic = (1..r).any(|i| s.valency(i) == 3 && s.is_connected_relation(i));
    let c = if cubic { classify_cubic_mult3(s) } else { classify_partially_metric_mult3(s) };
    if !c.mult3.is_empty() {
        out.push(Verdict::new(
            "multiplicity 3 classification",
            if c.case.is_some() && c.thetas_in_set { Status::Pass } else { Status::Fail },
            format!("{}; theta = {}", c.note, strings(&c.thetas).join(", ")),
        ));
    }
    out
}

pub fn spectral_report(s: &AssociationScheme) -> Result<SpectralReport> {
    let sd = eigensystem(s)?;
    let kt = krein(&sd);
    Ok(SpectralReport {
        n: sd.n,
        rank: sd.rank(),
        valencies: sd.valencies.clone(),
        field: field_name(&sd),
        theta: (0..sd.rank()).map(|j| sd.theta(j).to_string()).collect(),
        multiplicities: sd.multiplicities.clone(),
        p: matrix_rows(&sd.p),
        q: matrix_rows(&sd.q),
        krein: kt.nonzero().into_iter().map(|(h, i, j, q)| KreinTriple { h, i, j, value: q.to_string() }).collect(),
        cosines: (0..sd.rank()).map(|j| strings(&sd.cosines(j))).collect(),
        verdicts: scheme_verdicts(s, &sd),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct DiagramReport {
    pub labels: Vec<usize>,
    pub valencies: Vec<usize>,
    pub n: usize,
    pub eigenvalues: Vec<String>,
    pub multiplicities: Vec<Option<String>>,
    pub unsplit_factors: Vec<String>,
    pub complete: bool,
    pub violations: Vec<String>,
    pub feasible: bool,
}

impl DiagramReport {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "diagram on {} points, bubbles {}", self.n, join(&self.labels)).unwrap();
        writeln!(s, "valencies {}", join(&self.valencies)).unwrap();
        for (t, m) in self.eigenvalues.iter().zip(&self.multiplicities) {
            writeln!(s, "  theta {t}: m = {}", m.as_deref().unwrap_or("?")).unwrap();
        }
        for f in &self.unsplit_factors {
            writeln!(s, "  unsplit factor {f}").unwrap();
        }
        if !self.complete {
            writeln!(s, "  incomplete: repeated or unsplit eigenvalues, parameters not rebuilt").unwrap();
        }
        for v in &self.violations {
            writeln!(s, "[FAIL] {v}").unwrap();
        }
        writeln!(s, "{}", if self.feasible { "feasible" } else { "infeasible" }).unwrap();
        s
    }
}

pub fn diagram_report(dg: &Diagram) -> Result<DiagramReport> {
    let f = diagram_feasibility(dg)?;
    Ok(DiagramReport {
        labels: dg.labels.clone(),
        valencies: dg.valencies.clone(),
        n: dg.n(),
        eigenvalues: strings(&f.eigenvalues),
        multiplicities: f.multiplicities.iter().map(|m| m.as_ref().map(ToString::to_string)).collect(),
        unsplit_factors: f.unsplit_factors.iter().map(ToString::to_string).collect(),
        complete: f.complete,
        violations: f.violations(),
        feasible: f.feasible(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfigurationSummary {
    pub n: usize,
    pub rank: usize,
    pub fibers: usize,
    pub homogeneous: bool,
    pub symmetric: bool,
    pub commutative: bool,
    pub valencies: Vec<usize>,
}

impl ConfigurationSummary {
    pub fn of(cc: &CoherentConfiguration) -> Self {
        let p = cc.classify_properties();
        ConfigurationSummary {
            n: cc.n(),
            rank: cc.rank(),
            fibers: cc.fiber_count(),
            homogeneous: p.homogeneous,
            symmetric: p.symmetric,
            commutative: p.commutative,
            valencies: (0..cc.rank()).map(|i| cc.valency(i)).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        format!(
            "coherent configuration on {} points: rank {}, {} fiber(s), {}homogeneous, {}symmetric, {}commutative\nvalencies {}\n",
            self.n,
            self.rank,
            self.fibers,
            if self.homogeneous { "" } else { "not " },
            if self.symmetric { "" } else { "not " },
            if self.commutative { "" } else { "not " },
            join(&self.valencies),
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalyzeReport {
    pub configuration: ConfigurationSummary,
    /// `t` of the partial metric ordering with respect to `R_1`, if it exists.
    pub partially_metric_t: Option<usize>,
    pub spectral: Option<SpectralReport>,
    pub diagram: Option<DiagramReport>,
}

impl AnalyzeReport {
    pub fn passed(&self) -> bool {
        self.spectral.as_ref().is_none_or(SpectralReport::passed)
    }

    pub fn to_text(&self) -> String {
        let mut s = self.configuration.to_text();
        if let Some(t) = self.partially_metric_t {
            writeln!(s, "{t}-partially metric with respect to R_1").unwrap();
        }
        match &self.spectral {
            Some(sp) => s.push_str(&sp.to_text()),
            None => s.push_str("not a symmetric association scheme; no spectral data\n"),
        }
        if let Some(d) = &self.diagram {
            s.push_str(&d.to_text());
        }
        s
    }
}

/// Spectral data and verdicts for a scheme; the diagram of `R_1` is checked when `with_diagram`.
pub fn analyze_scheme(cc: &CoherentConfiguration, s: Option<&AssociationScheme>, with_diagram: bool) -> Result<AnalyzeReport> {
    let configuration = ConfigurationSummary::of(cc);
    let Some(s) = s else {
        return Ok(AnalyzeReport { configuration, partially_metric_t: None, spectral: None, diagram: None });
    };
    let partially_metric_t = if s.rank() >= 2 { partially_metric_order(s, 1).ok().map(|pm| pm.t) } else { None };
    let spectral = Some(spectral_report(s)?);
    let diagram = if with_diagram && s.rank() >= 2 {
        Some(diagram_report(&crate::scheme::relation_distribution_diagram(s, 1)?)?)
    } else {
        None
    };
    Ok(AnalyzeReport { configuration, partially_metric_t, spectral, diagram })
}
