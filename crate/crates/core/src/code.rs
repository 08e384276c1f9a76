//! Two-block CSS codes: construction from raw commuting blocks, from
//! group-algebra pairs, or from polynomial pairs over a cyclic group, plus
//! the rank decomposition and the idempotent-commutation dimension check.

use crate::algebra::GroupAlgebraElement;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::FiniteGroup;
use crate::linalg::{idempotent_pair, FpMatrix};
use crate::poly::FpPoly;

/// A general CSS code: two generator matrices with equal column counts and
/// orthogonal rows, with ranks and dimension computed eagerly.
#[derive(Clone)]
pub struct CssCode {
    h_x: FpMatrix,
    h_z: FpMatrix,
    rank_h_x: usize,
    rank_h_z: usize,
    k: usize,
}

impl CssCode {
    pub fn new(h_x: FpMatrix, h_z: FpMatrix) -> Result<Self> {
        if h_x.field() != h_z.field() {
            return Err(Error::MismatchedFields);
        }
        if h_x.cols() != h_z.cols() {
            return Err(Error::Dimension(format!(
                "generator matrices have {} and {} columns",
                h_x.cols(),
                h_z.cols()
            )));
        }
        if !h_x.matmul(&h_z.transpose()).is_zero() {
            return Err(Error::InvalidInput("generator rows are not orthogonal".into()));
        }
        let rank_h_x = h_x.rank();
        let rank_h_z = h_z.rank();
        let k = h_x
            .cols()
            .checked_sub(rank_h_x + rank_h_z)
            .expect("orthogonality bounds the ranks");
        Ok(CssCode { h_x, h_z, rank_h_x, rank_h_z, k })
    }

    pub fn h_x(&self) -> &FpMatrix {
        &self.h_x
    }

    pub fn h_z(&self) -> &FpMatrix {
        &self.h_z
    }

    pub fn n(&self) -> usize {
        self.h_x.cols()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn rank_h_x(&self) -> usize {
        self.rank_h_x
    }

    pub fn rank_h_z(&self) -> usize {
        self.rank_h_z
    }

    pub fn field(&self) -> PrimeField {
        self.h_x.field()
    }
}

/// A group-algebra pair defining a code with A = L(a), B = R(b).
#[derive(Clone)]
pub struct GroupAlgebraPair {
    pub group: FiniteGroup,
    pub a: GroupAlgebraElement,
    pub b: GroupAlgebraElement,
}

/// Where a two-block code came from.
#[derive(Clone)]
pub enum Provenance {
    /// Raw commuting matrices.
    Raw,
    /// A finite group with two algebra elements.
    GroupAlgebra(Box<GroupAlgebraPair>),
    /// Polynomials over a cyclic group.
    Bicycle { length: usize, a: FpPoly, b: FpPoly, pair: Box<GroupAlgebraPair> },
}

/// A CSS code with H_X = (A|B) and H_Z = (B^T|-A^T) for square commuting
/// blocks A, B.
#[derive(Clone)]
pub struct TwoBlockCode {
    a: FpMatrix,
    b: FpMatrix,
    css: CssCode,
    provenance: Provenance,
}

impl TwoBlockCode {
    /// Builds from raw blocks; non-commuting inputs are rejected, never
    /// symmetrized.
    pub fn from_blocks(a: FpMatrix, b: FpMatrix) -> Result<Self> {
        Self::assemble(a, b, Provenance::Raw)
    }

    /// Builds from a group-algebra pair: A = L(a), B = R(b). The left and
    /// right actions always commute, which is what makes the CSS
    /// orthogonality automatic.
    pub fn from_group_algebra(a: &GroupAlgebraElement, b: &GroupAlgebraElement) -> Result<Self> {
        if a.group() != b.group() {
            return Err(Error::MismatchedGroups);
        }
        if a.field() != b.field() {
            return Err(Error::MismatchedFields);
        }
        let pair = GroupAlgebraPair { group: a.group().clone(), a: a.clone(), b: b.clone() };
        Self::assemble(
            a.left_matrix(),
            b.right_matrix(),
            Provenance::GroupAlgebra(Box::new(pair)),
        )
    }

    /// Builds the cyclic-group special case from polynomials: the blocks are
    /// the circulants a(P), b(P) with P the cyclic permutation matrix.
    /// Identical to the group-algebra construction over cyclic(length).
    pub fn generalized_bicycle(length: usize, a: &FpPoly, b: &FpPoly) -> Result<Self> {
        if length == 0 {
            return Err(Error::NonPositiveLength);
        }
        if a.field() != b.field() {
            return Err(Error::MismatchedFields);
        }
        for p in [a, b] {
            if p.degree().is_some_and(|d| d >= length) {
                return Err(Error::InvalidInput(format!(
                    "polynomial degree {} not below block length {length}",
                    p.degree().unwrap()
                )));
            }
        }
        let group = FiniteGroup::cyclic(length)?;
        // element x^i sits at index i in the cyclic group's BFS order
        let to_element = |p: &FpPoly| {
            let mut coeffs = vec![0i64; length];
            for (i, &c) in p.coeffs().iter().enumerate() {
                coeffs[i] = c as i64;
            }
            GroupAlgebraElement::from_coeffs(group.clone(), p.field(), coeffs)
        };
        let ea = to_element(a);
        let eb = to_element(b);
        let pair = GroupAlgebraPair { group, a: ea.clone(), b: eb.clone() };
        Self::assemble(
            ea.left_matrix(),
            eb.right_matrix(),
            Provenance::Bicycle { length, a: a.clone(), b: b.clone(), pair: Box::new(pair) },
        )
    }

    fn assemble(a: FpMatrix, b: FpMatrix, provenance: Provenance) -> Result<Self> {
        if a.field() != b.field() {
            return Err(Error::MismatchedFields);
        }
        if a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows() {
            return Err(Error::Dimension(format!(
                "blocks must be square and equal-sized, got {}x{} and {}x{}",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols()
            )));
        }
        if a.matmul(&b) != b.matmul(&a) {
            return Err(Error::BlocksDontCommute);
        }
        let h_x = FpMatrix::hstack(&[&a, &b]);
        let h_z = FpMatrix::hstack(&[&b.transpose(), &a.transpose().negated()]);
        let css = CssCode::new(h_x, h_z).expect("commuting blocks give orthogonal rows");
        Ok(TwoBlockCode { a, b, css, provenance })
    }

    pub fn a(&self) -> &FpMatrix {
        &self.a
    }

    pub fn b(&self) -> &FpMatrix {
        &self.b
    }

    pub fn block_size(&self) -> usize {
        self.a.rows()
    }

    pub fn css(&self) -> &CssCode {
        &self.css
    }

    pub fn h_x(&self) -> &FpMatrix {
        self.css.h_x()
    }

    pub fn h_z(&self) -> &FpMatrix {
        self.css.h_z()
    }

    pub fn n(&self) -> usize {
        self.css.n()
    }

    pub fn k(&self) -> usize {
        self.css.k()
    }

    pub fn rank_h_x(&self) -> usize {
        self.css.rank_h_x()
    }

    pub fn rank_h_z(&self) -> usize {
        self.css.rank_h_z()
    }

    pub fn field(&self) -> PrimeField {
        self.css.field()
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// The group-algebra pair behind this code, if it has one.
    pub fn group_algebra_pair(&self) -> Option<&GroupAlgebraPair> {
        match &self.provenance {
            Provenance::Raw => None,
            Provenance::GroupAlgebra(p) => Some(p),
            Provenance::Bicycle { pair, .. } => Some(pair),
        }
    }

    /// Block ranks recomputed through the idempotent decomposition:
    /// rank H_X = rank A + rank((I-E)B) and rank H_Z = rank A + rank(B(I-F)).
    pub fn rank_decomposition(&self) -> RankDecomposition {
        let (e, f) = idempotent_pair(&self.a);
        let id = FpMatrix::identity(self.field(), self.block_size());
        let rank_a = self.a.rank();
        let residual_x = id.matsub(&e).matmul(&self.b).rank();
        let residual_z = self.b.matmul(&id.matsub(&f)).rank();
        RankDecomposition {
            rank_a,
            residual_x,
            residual_z,
            x_via_idempotents: rank_a + residual_x,
            z_via_idempotents: rank_a + residual_z,
            x_direct: self.rank_h_x(),
            z_direct: self.rank_h_z(),
        }
    }

    /// Tests whether the concrete idempotent pair built from A commutes with
    /// B (retrying with the blocks swapped). Commutation is sufficient for
    /// rank H_X = rank H_Z and even k; failure is reported as inconclusive
    /// because other idempotent choices might still commute.
    pub fn idempotent_commutation(&self) -> Statement1Report {
        let ranks_equal = self.rank_h_x() == self.rank_h_z();
        let commutes_with = |m: &FpMatrix, other: &FpMatrix| {
            let (e, f) = idempotent_pair(m);
            e.matmul(other) == other.matmul(&e) && f.matmul(other) == other.matmul(&f)
        };
        let verdict = if commutes_with(&self.a, &self.b) {
            IdempotentVerdict::GuaranteedEqual
        } else if commutes_with(&self.b, &self.a) {
            IdempotentVerdict::GuaranteedEqualSwapped
        } else {
            IdempotentVerdict::Inconclusive
        };
        if verdict != IdempotentVerdict::Inconclusive {
            assert!(ranks_equal, "commuting idempotents force equal block ranks");
            assert_eq!(self.k() % 2, 0, "commuting idempotents force even k");
        }
        Statement1Report { verdict, ranks_equal }
    }
}

/// Outcome of the idempotent-commutation check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdempotentVerdict {
    GuaranteedEqual,
    GuaranteedEqualSwapped,
    Inconclusive,
}

impl IdempotentVerdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            IdempotentVerdict::GuaranteedEqual => "guaranteed-equal",
            IdempotentVerdict::GuaranteedEqualSwapped => "guaranteed-equal-swapped",
            IdempotentVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub struct Statement1Report {
    pub verdict: IdempotentVerdict,
    pub ranks_equal: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct RankDecomposition {
    pub rank_a: usize,
    pub residual_x: usize,
    pub residual_z: usize,
    pub x_via_idempotents: usize,
    pub z_via_idempotents: usize,
    pub x_direct: usize,
    pub z_direct: usize,
}

impl RankDecomposition {
    pub fn consistent(&self) -> bool {
        self.x_via_idempotents == self.x_direct && self.z_via_idempotents == self.z_direct
    }
}

/// Code dimension of the cyclic-group construction from the gcd formula:
/// k = 2 deg gcd(a, b, x^l - 1). Both polynomials zero is the degenerate
/// ideal case with gcd x^l - 1 and k = 2l.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GbDimension {
    pub k: usize,
    pub degenerate: bool,
}

pub fn gb_dimension(length: usize, a: &FpPoly, b: &FpPoly) -> Result<GbDimension> {
    if length == 0 {
        return Err(Error::NonPositiveLength);
    }
    if a.field() != b.field() {
        return Err(Error::MismatchedFields);
    }
    if a.is_zero() && b.is_zero() {
        return Ok(GbDimension { k: 2 * length, degenerate: true });
    }
    let modulus = FpPoly::x_pow_minus_one(a.field(), length)?;
    let g1 = a.gcd(b)?;
    let h = g1.gcd(&modulus)?;
    let k = 2 * h.degree().expect("gcd with a nonzero modulus is nonzero");
    Ok(GbDimension { k, degenerate: false })
}
