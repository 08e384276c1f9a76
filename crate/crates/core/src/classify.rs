//! Classification of group-algebra two-block codes, the central-intersection
//! distance bound, and the hypergraph-product equivalence check for trivial
//! intersection.

use crate::code::{CssCode, TwoBlockCode};
use crate::distance::{
    classical_kernel_distance, css_distance_exact, CssSide, Distance, DistanceResult,
};
use crate::error::{Error, Result};
use crate::group::Subgroup;
use crate::linalg::FpMatrix;
use std::fmt;

/// Classification labels, in the priority order they are assigned.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeClass {
    Abelian,
    QuasiCyclicReducible,
    SemiAbelian,
    EssentiallyNonAbelian,
    Unclassified,
}

impl CodeClass {
    pub fn as_str(&self) -> &'static str {
        match self {
            CodeClass::Abelian => "abelian",
            CodeClass::QuasiCyclicReducible => "quasi-cyclic-reducible",
            CodeClass::SemiAbelian => "semi-abelian",
            CodeClass::EssentiallyNonAbelian => "essentially-non-abelian",
            CodeClass::Unclassified => "unclassified",
        }
    }
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Every sufficient condition evaluated during classification.
#[derive(Debug, Clone, Copy)]
pub struct ClassificationEvidence {
    pub group_abelian: bool,
    pub support_a_cyclic: bool,
    pub support_b_cyclic: bool,
    /// gcd(p, |G|) = 1: the whole group algebra is semisimple.
    pub group_semisimple: bool,
    /// gcd(p, |G_a|) = 1.
    pub support_a_semisimple: bool,
    /// gcd(p, |G_b|) = 1.
    pub support_b_semisimple: bool,
    pub k_odd: bool,
}

#[derive(Debug, Clone)]
pub struct Classification {
    pub label: CodeClass,
    pub evidence: ClassificationEvidence,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Classifies a code with group provenance by the first matching sufficient
/// condition: abelian group, cyclic support subgroup, semisimple (sub)algebra,
/// then the odd-k criterion; otherwise unclassified.
pub fn classify(code: &TwoBlockCode) -> Result<Classification> {
    let pair = code
        .group_algebra_pair()
        .ok_or(Error::ClassificationRequiresGroup)?;
    let p = code.field().p() as usize;
    let group = &pair.group;
    let ga = pair.a.support_subgroup();
    let gb = pair.b.support_subgroup();
    let evidence = ClassificationEvidence {
        group_abelian: group.is_abelian(),
        support_a_cyclic: ga.is_cyclic(),
        support_b_cyclic: gb.is_cyclic(),
        group_semisimple: gcd(p, group.order()) == 1,
        support_a_semisimple: gcd(p, ga.order()) == 1,
        support_b_semisimple: gcd(p, gb.order()) == 1,
        k_odd: code.k() % 2 == 1,
    };
    let label = if evidence.group_abelian {
        CodeClass::Abelian
    } else if evidence.support_a_cyclic || evidence.support_b_cyclic {
        CodeClass::QuasiCyclicReducible
    } else if evidence.group_semisimple
        || evidence.support_a_semisimple
        || evidence.support_b_semisimple
    {
        CodeClass::SemiAbelian
    } else if evidence.k_odd {
        CodeClass::EssentiallyNonAbelian
    } else {
        CodeClass::Unclassified
    };
    if matches!(
        label,
        CodeClass::Abelian | CodeClass::QuasiCyclicReducible | CodeClass::SemiAbelian
    ) {
        assert_eq!(code.k() % 2, 0, "{label} codes have even dimension");
    }
    Ok(Classification { label, evidence })
}

/// Report of the central-intersection lower bound on d_Z: when
/// N = G_a intersect G_b is central of size c coprime to p, then
/// d_Z >= floor(d_0 / c) with d_0 the smaller classical kernel distance of
/// the two blocks.
pub struct CentralIntersectionReport {
    pub support_a: Subgroup,
    pub support_b: Subgroup,
    pub intersection: Subgroup,
    pub c: usize,
    pub central: bool,
    pub gcd_ok: bool,
    pub d0: Distance,
    /// Present only when central and gcd_ok; infinite (degenerate) when
    /// both classical kernels are trivial.
    pub bound: Option<Distance>,
    pub degenerate: bool,
}

pub fn central_intersection_bound(
    code: &TwoBlockCode,
    budget: u64,
) -> Result<CentralIntersectionReport> {
    let pair = code
        .group_algebra_pair()
        .ok_or(Error::ClassificationRequiresGroup)?;
    let p = code.field().p() as usize;
    let group = &pair.group;
    let support_a = pair.a.support_subgroup();
    let support_b = pair.b.support_subgroup();
    let intersection = support_a.intersection(&support_b)?;
    let c = intersection.order();
    let central = group.is_central(&intersection)?;
    let gcd_ok = gcd(p, c) == 1;
    let da = classical_kernel_distance(code.a(), budget)?;
    let db = classical_kernel_distance(code.b(), budget)?;
    let d0 = da.value.min(db.value);
    let applicable = central && gcd_ok;
    let (bound, degenerate) = if !applicable {
        (None, false)
    } else {
        match d0 {
            Distance::Finite(d) => (Some(Distance::Finite(d / c)), false),
            Distance::Infinite => (Some(Distance::Infinite), true),
        }
    };
    Ok(CentralIntersectionReport {
        support_a,
        support_b,
        intersection,
        c,
        central,
        gcd_ok,
        d0,
        bound,
        degenerate,
    })
}

/// Hypergraph product of two classical parity-check matrices:
/// H_X = (h1 x I | I x h2^T), H_Z = (I x h2 | -(h1^T x I)), with block
/// lengths n1*n2 + m1*m2. The sign makes the rows orthogonal for every
/// characteristic; over F_2 it is a no-op.
pub fn hp_build(h1: &FpMatrix, h2: &FpMatrix) -> Result<CssCode> {
    if h1.field() != h2.field() {
        return Err(Error::MismatchedFields);
    }
    let f = h1.field();
    let (m1, n1) = (h1.rows(), h1.cols());
    let (m2, n2) = (h2.rows(), h2.cols());
    let h_x = FpMatrix::hstack(&[
        &h1.kron(&FpMatrix::identity(f, n2)),
        &FpMatrix::identity(f, m1).kron(&h2.transpose()),
    ]);
    let h_z = FpMatrix::hstack(&[
        &FpMatrix::identity(f, n1).kron(h2),
        &h1.transpose().kron(&FpMatrix::identity(f, m2)).negated(),
    ]);
    CssCode::new(h_x, h_z)
}

/// Parameters compared by the equivalence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub k: usize,
    pub d_z: Distance,
    pub d_x: Distance,
}

fn parameters_of(code: &CssCode, budget: u64) -> Result<CodeParameters> {
    let dz = css_distance_exact(code, CssSide::Z, budget)?;
    let dx = css_distance_exact(code, CssSide::X, budget)?;
    Ok(CodeParameters { n: code.n(), k: code.k(), d_z: dz.value, d_x: dx.value })
}

/// Result of comparing a group-algebra code against the hypergraph product
/// of its restricted blocks. Applicable only for trivial intersection with
/// |G_a|*|G_b| = |G|, where every group element factors uniquely across the
/// two support subgroups.
pub struct HpEquivalenceReport {
    pub applicable: bool,
    pub intersection_order: usize,
    pub support_sizes: (usize, usize),
    pub group_order: usize,
    pub group_code: Option<CodeParameters>,
    pub hp_code: Option<CodeParameters>,
    pub parameters_match: Option<bool>,
}

pub fn hp_equivalence_check(code: &TwoBlockCode, budget: u64) -> Result<HpEquivalenceReport> {
    let pair = code
        .group_algebra_pair()
        .ok_or(Error::ClassificationRequiresGroup)?;
    let group = &pair.group;
    let ga = pair.a.support_subgroup();
    let gb = pair.b.support_subgroup();
    let n_sub = ga.intersection(&gb)?;
    let applicable = n_sub.is_trivial() && ga.order() * gb.order() == group.order();
    if !applicable {
        return Ok(HpEquivalenceReport {
            applicable,
            intersection_order: n_sub.order(),
            support_sizes: (ga.order(), gb.order()),
            group_order: group.order(),
            group_code: None,
            hp_code: None,
            parameters_match: None,
        });
    }
    let h1 = pair.a.left_matrix_on(&ga)?;
    let h2 = pair.b.right_matrix_on(&gb)?;
    let hp = hp_build(&h1, &h2)?;
    let group_params = parameters_of(code.css(), budget)?;
    let hp_params = parameters_of(&hp, budget)?;
    let parameters_match = group_params == hp_params;
    Ok(HpEquivalenceReport {
        applicable,
        intersection_order: n_sub.order(),
        support_sizes: (ga.order(), gb.order()),
        group_order: group.order(),
        group_code: Some(group_params),
        hp_code: Some(hp_params),
        parameters_match: Some(parameters_match),
    })
}

/// Convenience: exact distance results for both sides of a CSS code.
pub fn exact_distances(code: &CssCode, budget: u64) -> Result<(DistanceResult, DistanceResult)> {
    Ok((
        css_distance_exact(code, CssSide::Z, budget)?,
        css_distance_exact(code, CssSide::X, budget)?,
    ))
}
