//! Divisor search over `x^β - λ`, Gray-image parameters, and the ten-row
//! benchmark table of free quaternary codes.

use std::fmt;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graymaps::GrayVariant;
use crate::rcodes::Twist;
use crate::rings::{Automorphism, RingElem, RingParams};
use crate::skewpoly::{SkewPoly, SkewRing, DEFAULT_DIVISOR_CAP};
use crate::zqlinalg::{CodeType, GenMatrix, DEFAULT_CODEWORD_CAP};
use crate::zqpoly::ZqPoly;
use crate::zqrcodes::{generator_from_parity, FactorSide, MixedCode, MixedCodeSpec, SpanRule};

/// The embedded benchmark manifest.
pub const TABLE1_MANIFEST: &str = include_str!("../data/table1.manifest");

/// Ring context of the benchmark table: Z_4, θ = (0, 3), λ = 1.
pub fn table1_twist() -> Twist {
    let theta = Automorphism::new(RingParams::z4(), 0, 3).expect("valid automorphism");
    Twist::new(SkewRing::new(theta), RingElem::ONE).expect("1 is a unit")
}

/// `[n, k, d]` with `k` the quaternary dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Target {
    pub n: usize,
    pub k: usize,
    pub d: u32,
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.n, self.k, self.d)
    }
}

/// One line of a manifest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestRow {
    /// 1-based position among the data rows.
    pub row: usize,
    /// 1-based line number in the manifest text.
    pub line: usize,
    pub alpha: usize,
    pub beta: usize,
    pub g_alpha: String,
    pub h_beta: String,
    pub map: Option<GrayVariant>,
    pub target: Target,
}

/// Parses `key=value` rows; blank lines and `#` comments are skipped.
pub fn parse_manifest(text: &str) -> Result<Vec<ManifestRow>> {
    let mut rows = Vec::new();
    let mut offset = 0;
    for (index, raw) in text.lines().enumerate() {
        let line_start = offset;
        offset += raw.len() + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let mut fields = std::collections::HashMap::new();
        for token in content.split_whitespace() {
            let pos = line_start + (token.as_ptr() as usize - raw.as_ptr() as usize);
            let (key, value) = token
                .split_once('=')
                .ok_or_else(|| Error::parse(pos, format!("expected key=value, got '{token}'")))?;
            if fields.insert(key, (pos, value)).is_some() {
                return Err(Error::parse(pos, format!("duplicate key '{key}'")));
            }
        }
        let take = |key: &str| {
            fields
                .get(key)
                .copied()
                .ok_or_else(|| Error::parse(line_start, format!("line {}: missing '{key}'", index + 1)))
        };
        let number = |key: &str| -> Result<usize> {
            let (pos, value) = take(key)?;
            value
                .parse()
                .map_err(|_| Error::parse(pos, format!("'{key}' must be a non-negative integer")))
        };
        let map = match fields.get("map") {
            Some(&(_, value)) => Some(value.parse()?),
            None => None,
        };
        rows.push(ManifestRow {
            row: rows.len() + 1,
            line: index + 1,
            alpha: number("alpha")?,
            beta: number("beta")?,
            g_alpha: take("g_alpha")?.1.to_string(),
            h_beta: take("h_beta")?.1.to_string(),
            map,
            target: Target {
                n: number("n")?,
                k: number("k")?,
                d: number("d")? as u32,
            },
        });
    }
    Ok(rows)
}

/// Measured parameters of one Gray image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Parameters {
    pub n: usize,
    pub code_type: CodeType,
    /// `None` when the code is too large to enumerate under the cap.
    pub d: Option<u32>,
}

impl Parameters {
    /// Image of `code` under `variant`; `d` is skipped (not failed) past the cap.
    pub fn measure(code: &MixedCode, variant: GrayVariant, cap: u128, exec: Exec) -> Result<Parameters> {
        let image = code.gray_matrix(variant)?;
        Parameters::of_matrix(&image, cap, exec)
    }

    pub fn of_matrix(image: &GenMatrix, cap: u128, exec: Exec) -> Result<Parameters> {
        let code_type = image.code_type();
        let d = match image.min_lee_distance(cap, exec) {
            Ok(d) => Some(d),
            Err(Error::EnumerationCapExceeded { .. }) => None,
            Err(Error::ZeroCode) => Some(0),
            Err(e) => return Err(e),
        };
        Ok(Parameters {
            n: image.cols(),
            code_type,
            d,
        })
    }

    pub fn matches(&self, target: &Target) -> bool {
        self.n == target.n && self.code_type.is_free() && self.code_type.k1() == target.k && self.d == Some(target.d)
    }
}

impl fmt::Display for Parameters {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.d {
            Some(d) => write!(f, "[{},{},{}]", self.n, self.code_type, d),
            None => write!(f, "[{},{},?]", self.n, self.code_type),
        }
    }
}

/// A divisor search over `x^β - λ`.
#[derive(Debug, Clone)]
pub struct SearchJob {
    pub twist: Twist,
    pub alpha: usize,
    pub g_alpha: ZqPoly,
    pub beta: usize,
    /// Degrees of the parity check polynomial `h_β` to enumerate.
    pub degrees: Vec<usize>,
    pub variants: Vec<GrayVariant>,
    pub target: Option<Target>,
    /// Codes with fewer than this many quaternary dimensions (`k1 + k2/2`,
    /// rounded down) are dropped. `1` removes the zero code.
    pub min_dimension: usize,
    pub span: SpanRule,
    pub divisor_cap: u128,
    pub codeword_cap: u128,
    pub exec: Exec,
}

impl SearchJob {
    pub fn new(twist: Twist, alpha: usize, g_alpha: ZqPoly, beta: usize) -> Self {
        SearchJob {
            twist,
            alpha,
            g_alpha,
            beta,
            degrees: (1..=beta).collect(),
            variants: GrayVariant::ALL.to_vec(),
            target: None,
            min_dimension: 1,
            span: SpanRule::Module,
            divisor_cap: DEFAULT_DIVISOR_CAP,
            codeword_cap: DEFAULT_CODEWORD_CAP,
            exec: Exec::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundCode {
    pub h_beta: SkewPoly,
    pub g_beta: SkewPoly,
    pub side: FactorSide,
    pub variant: GrayVariant,
    pub params: Parameters,
}

impl fmt::Display for FoundCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} h={}", self.params, self.variant, self.h_beta)
    }
}

/// Enumerates monic divisors `h` (degree by degree, index order), builds the
/// code generated by `(g_α, g)` with `x^β - λ = g ∗ h`, and measures every
/// requested Gray image. Output order is divisor order × variant order.
pub fn run_search(job: &SearchJob) -> Result<Vec<FoundCode>> {
    let params = job.twist.params();
    if job.g_alpha.params() != params {
        return Err(Error::ContextMismatch);
    }
    if job.alpha > 0 && !job.g_alpha.divides_cyclic(job.alpha)? {
        return Err(Error::GeneratorNotDivisor);
    }
    for &variant in &job.variants {
        variant.check(&params)?;
    }
    let mut found = Vec::new();
    for &deg in &job.degrees {
        let pairs = job.twist.ring().right_divisor_pairs(
            job.beta,
            job.twist.lambda(),
            deg,
            job.divisor_cap,
            job.exec,
        )?;
        for (g_beta, h_beta) in pairs {
            let spec = MixedCodeSpec::new(job.alpha, job.beta, job.twist, job.g_alpha.clone(), g_beta.clone())?;
            let code = MixedCode::build(&spec, job.span);
            for &variant in &job.variants {
                let image = code.gray_matrix(variant)?;
                let code_type = image.code_type();
                if code_type.k1() + code_type.k2() / 2 < job.min_dimension {
                    continue;
                }
                if let Some(target) = &job.target {
                    let n = variant.image_len(job.alpha, job.beta);
                    if n != target.n || !code_type.is_free() || code_type.k1() != target.k {
                        continue;
                    }
                }
                let params = Parameters::of_matrix(&image, job.codeword_cap, job.exec)?;
                if params.d.is_none() {
                    return Err(Error::EnumerationCapExceeded {
                        needed: code_type.size(),
                        cap: job.codeword_cap,
                    });
                }
                if job.target.as_ref().is_some_and(|t| !params.matches(t)) {
                    continue;
                }
                found.push(FoundCode {
                    h_beta: h_beta.clone(),
                    g_beta: g_beta.clone(),
                    side: FactorSide::Right,
                    variant,
                    params,
                });
            }
        }
    }
    Ok(found)
}

/// Result of evaluating one manifest row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowOutcome {
    pub row: ManifestRow,
    pub variant: Option<GrayVariant>,
    pub side: Option<FactorSide>,
    pub measured: Option<Parameters>,
    /// Why the row could not be measured, if it could not.
    pub error: Option<String>,
}

impl RowOutcome {
    pub fn passed(&self) -> bool {
        self.measured
            .as_ref()
            .is_some_and(|m| m.matches(&self.row.target))
    }
}

impl fmt::Display for RowOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} row {}: expected {}", self.row.row, self.row.target)?;
        if let Some(v) = self.variant {
            write!(f, " ({v})")?;
        }
        match (&self.measured, &self.error) {
            (Some(m), _) => write!(f, ", got {m}")?,
            (None, Some(e)) => write!(f, ", error: {e}")?,
            (None, None) => {}
        }
        if let Some(side) = self.side {
            write!(f, " [{side}]")?;
        }
        Ok(())
    }
}

/// Per-row outcomes of a manifest run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableReport {
    pub rows: Vec<RowOutcome>,
}

impl TableReport {
    pub fn passed(&self) -> usize {
        self.rows.iter().filter(|r| r.passed()).count()
    }

    pub fn all_passed(&self) -> bool {
        self.passed() == self.rows.len()
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        write!(f, "{}/{} PASS", self.passed(), self.rows.len())
    }
}

/// Parses, builds, maps and measures one row.
pub fn evaluate_row(row: &ManifestRow, twist: &Twist, span: SpanRule, cap: u128, exec: Exec) -> RowOutcome {
    let mut outcome = RowOutcome {
        row: row.clone(),
        variant: GrayVariant::infer(row.alpha, row.beta, row.target.n),
        side: None,
        measured: None,
        error: None,
    };
    let result = (|| -> Result<Parameters> {
        let variant = outcome.variant.ok_or_else(|| {
            Error::UnsupportedVariant(format!(
                "n={} is neither alpha+2*beta nor alpha+3*beta",
                row.target.n
            ))
        })?;
        if row.map.is_some_and(|m| m != variant) {
            return Err(Error::UnsupportedVariant(format!(
                "map={} disagrees with n={}",
                row.map.expect("checked"),
                row.target.n
            )));
        }
        let params = twist.params();
        let g_alpha = ZqPoly::parse(&row.g_alpha, params)?;
        let h_beta = twist.ring().parse(&row.h_beta)?;
        let (g_beta, side) = generator_from_parity(&h_beta, row.beta, twist)?;
        outcome.side = Some(side);
        let spec = MixedCodeSpec::new(row.alpha, row.beta, *twist, g_alpha, g_beta)?;
        let code = MixedCode::build(&spec, span);
        Parameters::measure(&code, variant, cap, exec)
    })();
    match result {
        Ok(p) => outcome.measured = Some(p),
        Err(e) => outcome.error = Some(e.to_string()),
    }
    outcome
}

/// Runs every row of a manifest. Rows are evaluated in order; the distance
/// scans inside each row use `exec`.
pub fn reproduce_manifest(text: &str, twist: &Twist, span: SpanRule, cap: u128, exec: Exec) -> Result<TableReport> {
    let rows = parse_manifest(text)?;
    if rows.is_empty() {
        return Err(Error::ManifestMissing("manifest has no rows".into()));
    }
    Ok(TableReport {
        rows: rows
            .iter()
            .map(|row| evaluate_row(row, twist, span, cap, exec))
            .collect(),
    })
}

/// The embedded table under the module-span construction.
pub fn reproduce_table1(exec: Exec) -> Result<TableReport> {
    reproduce_manifest(TABLE1_MANIFEST, &table1_twist(), SpanRule::Module, DEFAULT_CODEWORD_CAP, exec)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn manifest_parses() {
        let rows = parse_manifest(TABLE1_MANIFEST).unwrap();
        assert_eq!(rows.len(), 10);
        assert_eq!(rows[0].target, Target { n: 43, k: 8, d: 26 });
        assert_eq!(rows[1].map, Some(GrayVariant::Triple));
        assert_eq!(rows[7].g_alpha, "12311");
        for row in &rows {
            assert_eq!(row.map, GrayVariant::infer(row.alpha, row.beta, row.target.n));
        }
    }

    #[test]
    fn manifest_errors() {
        assert!(matches!(parse_manifest("alpha=1 beta"), Err(Error::Parse { pos: 8, .. })));
        assert!(parse_manifest("alpha=1 beta=2 g_alpha=1 h_beta=1 n=5 k=1").is_err());
        assert!(parse_manifest("alpha=x beta=2 g_alpha=1 h_beta=1 n=5 k=1 d=2").is_err());
        assert_eq!(parse_manifest("# nothing\n\n").unwrap(), vec![]);
    }

    #[test]
    fn every_parity_check_divides() {
        let twist = table1_twist();
        for row in parse_manifest(TABLE1_MANIFEST).unwrap() {
            let h = twist.ring().parse(&row.h_beta).unwrap();
            let (g, side) = generator_from_parity(&h, row.beta, &twist).unwrap();
            assert_eq!(side, FactorSide::Right, "line {}", row.line);
            assert_eq!(g.mul(&h).unwrap(), twist.modulus(row.beta));
        }
    }

    #[test]
    fn small_search_is_deterministic() {
        let twist = table1_twist();
        let g_alpha = ZqPoly::parse("31", twist.params()).unwrap();
        let mut job = SearchJob::new(twist, 2, g_alpha, 2);
        job.degrees = vec![1];
        job.exec = Exec::Sequential;
        let seq = run_search(&job).unwrap();
        job.exec = Exec::Parallel;
        assert_eq!(run_search(&job).unwrap(), seq);
        assert!(!seq.is_empty());
        for code in &seq {
            assert_eq!(code.g_beta.mul(&code.h_beta).unwrap(), twist.modulus(2));
        }
    }

    #[test]
    fn trivial_factorisation_is_filtered() {
        let twist = table1_twist();
        let g_alpha = ZqPoly::cyclic_modulus(twist.params(), 2);
        let mut job = SearchJob::new(twist, 2, g_alpha, 2);
        job.degrees = vec![0, 2];
        job.variants = vec![GrayVariant::Double];
        job.min_dimension = 0;
        let all = run_search(&job).unwrap();
        assert_eq!(all[0].params.code_type.size(), 1);
        job.min_dimension = 1;
        let kept = run_search(&job).unwrap();
        assert_eq!(kept.len(), all.len() - 1);
    }
}
