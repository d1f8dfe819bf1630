//! Structured reports shared by the CLI and the C interface.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    light_tail_sufficiency, multiplicity_bound, profile_identity, theta1_lower_bound,
    theta1_upper_bound, BoundError, BoundReport, ProfileReport, SufficiencyReport,
};
use crate::drg::{parse_array, IntersectionArray, SpectralData, SpectrumError};
use crate::exactnum::Scalar;
use crate::finitegeom::{
    build_hamming, build_hermitian_dual_polar, find_induced_gq, maximal_cliques,
    measure_parameters, verify_delsarte_completely_regular, verify_light_tail_on_graph,
    CompletelyRegularReport, FiniteGeomError, FiniteGraph, GqReport, GraphLightTailReport,
    MeasuredParameters,
};
use crate::geometric::{
    boundedness_conditions, corollary41_check, gamma_sequence, theorem11_classify,
    theorem12_check, Assumptions, BoundednessReport, ClassificationVerdict, ClassifyError,
    GeometricProfile,
};
use crate::krein::{krein_tensor, light_tail_scan, KreinError, LightTailReport};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

/// Input problems map to exit code 2, internal disagreements to 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReportError {
    #[error("{0}")]
    Input(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

impl ReportError {
    pub fn exit_code(&self) -> i32 {
        match self {
            ReportError::Input(_) => 2,
            ReportError::Internal(_) => 3,
        }
    }
}

impl From<SpectrumError> for ReportError {
    fn from(e: SpectrumError) -> Self {
        match e {
            SpectrumError::Inconsistent(m) => ReportError::Internal(m),
            other => ReportError::Input(other.to_string()),
        }
    }
}

impl From<KreinError> for ReportError {
    fn from(e: KreinError) -> Self {
        match e {
            KreinError::Inconsistent(m) => ReportError::Internal(m),
            other => ReportError::Input(other.to_string()),
        }
    }
}

impl From<ClassifyError> for ReportError {
    fn from(e: ClassifyError) -> Self {
        ReportError::Internal(e.to_string())
    }
}

impl From<FiniteGeomError> for ReportError {
    fn from(e: FiniteGeomError) -> Self {
        ReportError::Input(e.to_string())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct AnalyzeOptions {
    pub assume_2_bounded: bool,
    pub krein_full: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ToolInfo {
    pub name: &'static str,
    pub version: &'static str,
}

fn tool() -> ToolInfo {
    ToolInfo {
        name: "drgkit",
        version: TOOL_VERSION,
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct InputEcho {
    pub text: String,
    pub options: AnalyzeOptions,
}

#[derive(Debug, Clone, Serialize)]
pub struct ArraySection {
    #[serde(flatten)]
    pub array: IntersectionArray,
    pub bipartite: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct KreinEntry {
    pub i: usize,
    pub j: usize,
    pub h: usize,
    pub value: Scalar,
}

#[derive(Debug, Clone, Serialize)]
pub struct KreinSection {
    pub nonnegative: bool,
    /// `full`: every nonzero `q_ij^h`; `tail`: only `i = D`.
    pub scope: &'static str,
    pub entries: Vec<KreinEntry>,
    pub light_tail_scan: Vec<LightTailReport>,
}

/// A bound whose hypotheses may not apply.
#[derive(Debug, Clone, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum BoundOutcome<T> {
    Evaluated { report: T },
    NotApplicable { reasons: Vec<String> },
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsSection {
    pub multiplicity: Vec<BoundOutcome<BoundReport>>,
    pub theta1_lower: BoundOutcome<BoundReport>,
    pub theta1_upper: BoundOutcome<BoundReport>,
    pub light_tail_sufficiency: BoundOutcome<SufficiencyReport>,
    pub profile: ProfileReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct GeometricSection {
    #[serde(flatten)]
    pub profile: GeometricProfile,
    pub boundedness: BoundednessReport,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationSection {
    pub hermitian: ClassificationVerdict,
    pub half_valency: ClassificationVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bounded: Option<ClassificationVerdict>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GraphSection {
    pub family: String,
    pub parameters: Vec<u64>,
    pub n: usize,
    pub edges: usize,
    pub measured: MeasuredParameters,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub completely_regular: Option<Vec<CompletelyRegularReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub induced_gq: Option<BoundOutcome<GqReport>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub light_tail: Option<GraphLightTailReport>,
    pub all_checks_pass: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub tool: ToolInfo,
    pub exact_arithmetic: bool,
    pub input: InputEcho,
    pub array: ArraySection,
    pub spectral: SpectralData,
    pub krein: KreinSection,
    pub bounds: BoundsSection,
    pub geometric: GeometricSection,
    pub classification: ClassificationSection,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSection>,
}

fn outcome<T>(r: Result<T, BoundError>) -> Result<BoundOutcome<T>, ReportError> {
    match r {
        Ok(report) => Ok(BoundOutcome::Evaluated { report }),
        Err(BoundError::Hypothesis(reasons)) => Ok(BoundOutcome::NotApplicable { reasons }),
        Err(BoundError::Inconsistent(m)) => Err(ReportError::Internal(m)),
    }
}

pub fn analyze_text(text: &str, opts: AnalyzeOptions) -> Result<Report, ReportError> {
    let arr = parse_array(text).map_err(|e| ReportError::Input(e.to_string()))?;
    analyze(&arr, text, opts)
}

pub fn analyze(arr: &IntersectionArray, text: &str, opts: AnalyzeOptions) -> Result<Report, ReportError> {
    let spec = arr.spectral()?;
    let d = arr.diameter();
    let kt = krein_tensor(&spec)?;
    let scan = light_tail_scan(&spec, &kt);
    let entries = kt
        .nonzero_entries()
        .filter(|&(i, ..)| opts.krein_full || i == d)
        .map(|(i, j, h, value)| KreinEntry {
            i,
            j,
            h,
            value: value.clone(),
        })
        .collect();
    let krein = KreinSection {
        nonnegative: true,
        scope: if opts.krein_full { "full" } else { "tail" },
        entries,
        light_tail_scan: scan,
    };
    let gq = opts.assume_2_bounded;
    let bounds = BoundsSection {
        multiplicity: (1..=d)
            .map(|i| outcome(multiplicity_bound(arr, &spec, i)))
            .collect::<Result<_, _>>()?,
        theta1_lower: outcome(theta1_lower_bound(arr, &spec))?,
        theta1_upper: outcome(theta1_upper_bound(arr, &spec, gq))?,
        light_tail_sufficiency: outcome(light_tail_sufficiency(arr, &spec, gq))?,
        profile: profile_identity(arr, &spec),
    };
    let geometric = GeometricSection {
        profile: gamma_sequence(arr, &spec),
        boundedness: boundedness_conditions(arr),
    };
    let classification = classify(arr, &spec, opts.assume_2_bounded, None)?;
    Ok(Report {
        tool: tool(),
        exact_arithmetic: true,
        input: InputEcho {
            text: text.to_string(),
            options: opts,
        },
        array: ArraySection {
            array: arr.clone(),
            bipartite: arr.is_bipartite(),
        },
        spectral: (*spec).clone(),
        krein,
        bounds,
        geometric,
        classification,
        graph: None,
    })
}

/// The three classification pipelines; the bounded one runs only when an
/// m-boundedness level is supplied.
pub fn classify(
    arr: &IntersectionArray,
    spec: &SpectralData,
    assume_2_bounded: bool,
    m_bounded: Option<usize>,
) -> Result<ClassificationSection, ReportError> {
    Ok(ClassificationSection {
        hermitian: theorem11_classify(
            arr,
            spec,
            Assumptions {
                two_bounded: assume_2_bounded,
            },
        )?,
        half_valency: theorem12_check(arr, spec),
        bounded: m_bounded
            .map(|m| corollary41_check(arr, spec, m))
            .transpose()?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hermitian,
    Hamming,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyLevel {
    Basic,
    Full,
}

pub fn build_graph(family: Family, d: usize, q: u64) -> Result<FiniteGraph, ReportError> {
    Ok(match family {
        Family::Hermitian => build_hermitian_dual_polar(d, q)?,
        Family::Hamming => build_hamming(d, q as usize)?,
    })
}

/// Measures a constructed graph and analyzes its measured array.
pub fn construct_report(
    family: Family,
    d: usize,
    q: u64,
    level: VerifyLevel,
    opts: AnalyzeOptions,
) -> Result<(Report, FiniteGraph), ReportError> {
    let g = build_graph(family, d, q)?;
    let measured = measure_parameters(&g)?;
    let arr = measured.intersection_array.clone();
    let mut report = analyze(&arr, &arr.to_text(), opts)?;
    let spec = arr.spectral()?;
    let mut section = GraphSection {
        family: serde_json::to_value(family).unwrap().as_str().unwrap().to_string(),
        parameters: vec![d as u64, q],
        n: g.n(),
        edges: g.edge_count(),
        all_checks_pass: measured.diagnostics.is_empty()
            && measured.delsarte_complete
            && measured.gamma_measured.is_some(),
        measured,
        completely_regular: None,
        induced_gq: None,
        light_tail: None,
    };
    if level == VerifyLevel::Full {
        let bound = &section.measured.clique_bound;
        let crc: Vec<CompletelyRegularReport> = maximal_cliques(&g)
            .iter()
            .filter(|c| Scalar::from(c.len() as i64) == *bound)
            .map(|c| verify_delsarte_completely_regular(&g, c, bound))
            .collect::<Result<_, _>>()?;
        section.all_checks_pass &= crc.iter().all(|r| r.is_completely_regular);
        section.completely_regular = Some(crc);
        let (a1, c2) = (arr.a(1), if arr.diameter() >= 2 { arr.c(2) } else { 1 });
        let gq = match find_induced_gq(&g, a1 + 1, c2.saturating_sub(1)) {
            Ok(r) => BoundOutcome::Evaluated { report: r },
            Err(FiniteGeomError::Precondition(m)) => BoundOutcome::NotApplicable { reasons: vec![m] },
            Err(e) => return Err(e.into()),
        };
        if let BoundOutcome::Evaluated { report } = &gq {
            section.all_checks_pass &= report.is_gq;
        }
        section.induced_gq = Some(gq);
        let lt = verify_light_tail_on_graph(&g, &spec)?;
        if !lt.krein_agrees {
            return Err(ReportError::Internal(
                "graph-level light tail disagrees with the Krein row".into(),
            ));
        }
        section.light_tail = Some(lt);
    }
    report.graph = Some(section);
    Ok((report, g))
}
