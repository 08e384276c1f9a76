//! Enumeration of group-algebra code instances over listed groups with
//! bounded element weights.
//!
//! Supports of size 2..=w are enumerated (weight-1 elements are unit
//! monomials, which force invertible blocks and k = 0). Over F_2 the first
//! support element of each operand is fixed to the identity; for p > 2 all
//! supports and all nonzero coefficient assignments are enumerated.
//! Exact duplicates and (a,b) <-> (b,a) swaps are removed; rows are sorted
//! by (n, k, d, instance key) so the output is independent of evaluation
//! order.

use crate::output::CsvRow;
use qtwoblock_core::{
    central_intersection_bound, classify, css_distance_exact, css_distance_upper, CssSide,
    Distance, Error, FiniteGroup, GroupAlgebraElement, GroupSpec, PrimeField, Result,
    TwoBlockCode,
};
use std::collections::BTreeSet;
use std::path::Path;

pub struct ScanOptions {
    pub field: PrimeField,
    pub weight_a: usize,
    pub weight_b: usize,
    pub budget: u64,
    pub iterations: u64,
    pub seed: u64,
    pub no_fallback: bool,
}

/// All elements with support size between 2 and `max_weight`. Over F_2 the
/// support must contain the identity; over larger fields every nonzero
/// coefficient pattern is produced.
fn enumerate_elements(
    group: &FiniteGroup,
    field: PrimeField,
    max_weight: usize,
) -> Vec<GroupAlgebraElement> {
    let l = group.order();
    let max_weight = max_weight.min(l);
    let mut out = Vec::new();
    let anchored = field.is_binary();
    let mut support = Vec::new();
    for w in 2..=max_weight {
        let first_range = if anchored { 0..1 } else { 0..l };
        for first in first_range {
            support.clear();
            support.push(first);
            extend_support(group, field, &mut support, w, &mut out);
        }
    }
    out
}

fn extend_support(
    group: &FiniteGroup,
    field: PrimeField,
    support: &mut Vec<usize>,
    target: usize,
    out: &mut Vec<GroupAlgebraElement>,
) {
    if support.len() == target {
        emit_coefficient_patterns(group, field, support, out);
        return;
    }
    let last = *support.last().unwrap();
    for next in last + 1..group.order() {
        support.push(next);
        extend_support(group, field, support, target, out);
        support.pop();
    }
}

fn emit_coefficient_patterns(
    group: &FiniteGroup,
    field: PrimeField,
    support: &[usize],
    out: &mut Vec<GroupAlgebraElement>,
) {
    if field.is_binary() {
        out.push(GroupAlgebraElement::from_support(group.clone(), field, support));
        return;
    }
    // all (p-1)^w assignments of nonzero coefficients
    let p = field.p() as u16;
    let w = support.len();
    let mut digits = vec![1u16; w];
    loop {
        let mut coeffs = vec![0i64; group.order()];
        for (i, &g) in support.iter().enumerate() {
            coeffs[g] = digits[i] as i64;
        }
        out.push(GroupAlgebraElement::from_coeffs(group.clone(), field, coeffs));
        let mut pos = 0;
        loop {
            if pos == w {
                return;
            }
            digits[pos] += 1;
            if digits[pos] < p {
                break;
            }
            digits[pos] = 1;
            pos += 1;
        }
    }
}

fn instance_key(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Vec<u16> {
    let mut k = Vec::with_capacity(2 * a.coeffs().len());
    k.extend_from_slice(a.coeffs());
    k.extend_from_slice(b.coeffs());
    k
}

struct ScanResult {
    sort_key: (usize, usize, Distance, Vec<u16>),
    row: CsvRow,
}

pub fn run_scan(groups: &[(String, GroupSpec)], opts: &ScanOptions, base_dir: &Path) -> Result<Vec<CsvRow>> {
    if groups.is_empty() {
        return Err(Error::InvalidInput("no groups listed".into()));
    }
    if opts.weight_a == 0 || opts.weight_b == 0 {
        return Err(Error::InvalidInput("weight caps must be at least 1".into()));
    }
    let mut results: Vec<ScanResult> = Vec::new();
    for (label, gspec) in groups {
        let group = gspec.build(base_dir)?;
        let a_candidates = enumerate_elements(&group, opts.field, opts.weight_a);
        let b_candidates = if opts.weight_a == opts.weight_b {
            a_candidates.clone()
        } else {
            enumerate_elements(&group, opts.field, opts.weight_b)
        };
        let mut seen: BTreeSet<Vec<u16>> = BTreeSet::new();
        for a in &a_candidates {
            for b in &b_candidates {
                let key = instance_key(a, b).min(instance_key(b, a));
                if !seen.insert(key.clone()) {
                    continue;
                }
                let code = TwoBlockCode::from_group_algebra(a, b)?;
                let (dz, dx) = instance_distances(&code, opts)?;
                let label_text = classify(&code)?.label.to_string();
                let bound_text = match central_intersection_bound(&code, opts.budget) {
                    Ok(rep) => rep.bound.map(|d| d.to_string()).unwrap_or_default(),
                    Err(Error::BudgetExceeded { .. }) => String::new(),
                    Err(e) => return Err(e),
                };
                let d = dz.0.min(dx.0);
                results.push(ScanResult {
                    sort_key: (code.n(), code.k(), d, key),
                    row: CsvRow {
                        group: label.clone(),
                        p: opts.field.p(),
                        a: a.to_string(),
                        b: b.to_string(),
                        n: code.n(),
                        k: code.k(),
                        d_z: Some(dz),
                        d_x: Some(dx),
                        label: label_text,
                        bound: bound_text,
                    },
                });
            }
        }
    }
    results.sort_by(|x, y| x.sort_key.cmp(&y.sort_key));
    Ok(results.into_iter().map(|r| r.row).collect())
}

fn instance_distances(
    code: &TwoBlockCode,
    opts: &ScanOptions,
) -> Result<((Distance, bool), (Distance, bool))> {
    let side = |s: CssSide| -> Result<(Distance, bool)> {
        match css_distance_exact(code.css(), s, opts.budget) {
            Ok(r) => Ok((r.value, r.exact)),
            Err(Error::BudgetExceeded { .. }) if !opts.no_fallback => {
                let r = css_distance_upper(code.css(), s, opts.iterations, opts.seed)?;
                Ok((r.value, r.exact))
            }
            Err(e) => Err(e),
        }
    };
    Ok((side(CssSide::Z)?, side(CssSide::X)?))
}

/// Parses a groups file: one group spec per line, `#` comments allowed.
pub fn parse_groups_file(text: &str) -> Result<Vec<(String, GroupSpec)>> {
    let mut out = Vec::new();
    for raw in text.lines() {
        let line = match raw.find('#') {
            Some(h) => &raw[..h],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let spec = GroupSpec::parse(line)?;
        out.push((spec.to_string(), spec));
    }
    Ok(out)
}
