//! Elements of the group algebra `F_p[G]` and their regular-representation
//! matrices.

use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::{FiniteGroup, Subgroup};
use crate::linalg::FpMatrix;
use std::fmt;

/// A group-algebra element: one F_p coefficient per group element.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    group: FiniteGroup,
    field: PrimeField,
    coeffs: Vec<u16>,
}

impl GroupAlgebraElement {
    pub fn zero(group: FiniteGroup, field: PrimeField) -> Self {
        let coeffs = vec![0; group.order()];
        GroupAlgebraElement { group, field, coeffs }
    }

    /// The unit: coefficient 1 on the identity.
    pub fn unit(group: FiniteGroup, field: PrimeField) -> Self {
        let mut e = Self::zero(group, field);
        e.coeffs[0] = 1;
        e
    }

    pub fn from_coeffs(group: FiniteGroup, field: PrimeField, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), group.order(), "coefficient vector length");
        let coeffs = coeffs.iter().map(|&c| field.reduce(c)).collect();
        GroupAlgebraElement { group, field, coeffs }
    }

    /// Coefficient 1 on each listed element.
    pub fn from_support(group: FiniteGroup, field: PrimeField, support: &[usize]) -> Self {
        let mut e = Self::zero(group, field);
        for &g in support {
            e.coeffs[g] = 1;
        }
        e
    }

    /// Parses the comma-separated term syntax `coeff*word` with `coeff`
    /// omitted when 1, e.g. `1, x, y, x^-1*y*x` or `2*x, 1`.
    pub fn from_terms(group: &FiniteGroup, field: PrimeField, text: &str) -> Result<Self> {
        let mut e = Self::zero(group.clone(), field);
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Err(Error::InvalidInput("empty element expression".into()));
        }
        for raw in trimmed.split(',') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(Error::InvalidInput("empty term in element expression".into()));
            }
            let (coeff, word) = split_coeff(term);
            let c = field.reduce(coeff);
            let g = if word.is_empty() { 0 } else { group.parse_word(word)? };
            e.coeffs[g] = field.add(e.coeffs[g], c);
        }
        Ok(e)
    }

    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeff(&self, g: usize) -> u16 {
        self.coeffs[g]
    }

    pub fn coeffs(&self) -> &[u16] {
        &self.coeffs
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.coeffs.len()).filter(|&g| self.coeffs[g] != 0).collect()
    }

    /// Hamming weight of the coefficient vector; equals the row weight of
    /// both regular-representation matrices.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.group != other.group {
            return Err(Error::MismatchedGroups);
        }
        if self.field != other.field {
            return Err(Error::MismatchedFields);
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(&a, &b)| self.field.add(a, b))
            .collect();
        Ok(GroupAlgebraElement { group: self.group.clone(), field: self.field, coeffs })
    }

    pub fn scaled(&self, c: u16) -> Self {
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul(a, c)).collect();
        GroupAlgebraElement { group: self.group.clone(), field: self.field, coeffs }
    }

    /// Convolution product: (ab)_g = sum_h a_h b_{h^-1 g}.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let g = &self.group;
        let mut out = vec![0u16; g.order()];
        for h in self.support() {
            let ah = self.coeffs[h];
            for (j, &bj) in other.coeffs.iter().enumerate() {
                if bj != 0 {
                    let target = g.mul(h, j);
                    out[target] = self.field.add(out[target], self.field.mul(ah, bj));
                }
            }
        }
        Ok(GroupAlgebraElement { group: self.group.clone(), field: self.field, coeffs: out })
    }

    /// Coefficients transported to inverse elements: S(x)_g = x_{g^-1}.
    pub fn antipode(&self) -> Self {
        let g = &self.group;
        let mut coeffs = vec![0u16; g.order()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[g.inv(i)] = c;
        }
        GroupAlgebraElement { group: self.group.clone(), field: self.field, coeffs }
    }

    pub fn is_idempotent(&self) -> bool {
        self.product(self).expect("same group and field") == *self
    }

    /// Left regular action: column beta carries x_g at row g*beta.
    pub fn left_matrix(&self) -> FpMatrix {
        let g = &self.group;
        let l = g.order();
        let mut m = FpMatrix::zeros(self.field, l, l);
        for s in self.support() {
            let c = self.coeffs[s];
            for beta in 0..l {
                let row = g.mul(s, beta);
                m.set(row, beta, self.field.add(m.get(row, beta), c));
            }
        }
        m
    }

    /// Right regular action: column beta carries x_g at row beta*g.
    pub fn right_matrix(&self) -> FpMatrix {
        let g = &self.group;
        let l = g.order();
        let mut m = FpMatrix::zeros(self.field, l, l);
        for s in self.support() {
            let c = self.coeffs[s];
            for beta in 0..l {
                let row = g.mul(beta, s);
                m.set(row, beta, self.field.add(m.get(row, beta), c));
            }
        }
        m
    }

    /// Left action restricted to a subgroup containing the support; rows and
    /// columns are indexed by the subgroup's sorted member list.
    pub fn left_matrix_on(&self, sub: &Subgroup) -> Result<FpMatrix> {
        self.restricted_matrix(sub, true)
    }

    pub fn right_matrix_on(&self, sub: &Subgroup) -> Result<FpMatrix> {
        self.restricted_matrix(sub, false)
    }

    fn restricted_matrix(&self, sub: &Subgroup, left: bool) -> Result<FpMatrix> {
        if *sub.parent() != self.group {
            return Err(Error::MismatchedGroups);
        }
        if !self.support().iter().all(|&s| sub.contains(s)) {
            return Err(Error::InvalidInput(
                "support is not contained in the subgroup".into(),
            ));
        }
        let g = &self.group;
        let members = sub.members();
        let pos = |e: usize| members.binary_search(&e).expect("subgroup closed");
        let k = members.len();
        let mut m = FpMatrix::zeros(self.field, k, k);
        for s in self.support() {
            let c = self.coeffs[s];
            for (bi, &beta) in members.iter().enumerate() {
                let prod = if left { g.mul(s, beta) } else { g.mul(beta, s) };
                let row = pos(prod);
                m.set(row, bi, self.field.add(m.get(row, bi), c));
            }
        }
        Ok(m)
    }

    /// Subgroup generated by the support; the zero element gives {identity}.
    pub fn support_subgroup(&self) -> Subgroup {
        self.group.subgroup_generated(&self.support())
    }

    /// Coefficients transported through a group relabeling (old index i maps
    /// to `perm[i]` in `relabeled`).
    pub fn permuted(&self, relabeled: &FiniteGroup, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.group.order());
        assert_eq!(relabeled.order(), self.group.order());
        let mut coeffs = vec![0u16; self.coeffs.len()];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[perm[i]] = c;
        }
        GroupAlgebraElement { group: relabeled.clone(), field: self.field, coeffs }
    }
}

fn split_coeff(term: &str) -> (i64, &str) {
    let bytes = term.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
        pos += 1;
    }
    if pos == 0 {
        return (1, term);
    }
    let coeff: i64 = term[..pos].parse().unwrap_or(1);
    let rest = term[pos..].trim_start();
    if let Some(stripped) = rest.strip_prefix('*') {
        (coeff, stripped.trim_start())
    } else if rest.is_empty() {
        // bare integer: coeff * identity
        (coeff, "")
    } else {
        // e.g. "1" parsed off the front of a word like "1x" is not a term;
        // hand the whole thing to the word parser for a proper error
        (1, term)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for g in self.support() {
            if !first {
                write!(f, ", ")?;
            }
            first = false;
            let c = self.coeffs[g];
            let word = self.group.word_for(g);
            if c == 1 {
                write!(f, "{word}")?;
            } else if g == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*{word}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> PrimeField {
        PrimeField::binary()
    }

    fn f3() -> PrimeField {
        PrimeField::new(3).unwrap()
    }

    #[test]
    fn unit_is_neutral() {
        let g = FiniteGroup::alternating4();
        let one = GroupAlgebraElement::unit(g.clone(), f2());
        let a = GroupAlgebraElement::from_terms(&g, f2(), "1, x, y").unwrap();
        assert_eq!(a.product(&one).unwrap(), a);
        assert_eq!(one.product(&a).unwrap(), a);
    }

    #[test]
    fn nilpotent_squares() {
        // (1+x)^2 = 0 in F_2[C_2]
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let s = GroupAlgebraElement::from_terms(&c2, f2(), "1, x").unwrap();
        assert!(s.product(&s).unwrap().is_zero());
        // (1+x)(1-x) = 1 - x^2 = 0 in F_3[C_2]
        let a = GroupAlgebraElement::from_terms(&c2, f3(), "1, x").unwrap();
        let b = GroupAlgebraElement::from_coeffs(c2.clone(), f3(), vec![1, -1]);
        assert!(a.product(&b).unwrap().is_zero());
    }

    #[test]
    fn left_matrix_examples() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let one = GroupAlgebraElement::unit(c2.clone(), f2());
        assert_eq!(one.left_matrix(), FpMatrix::identity(f2(), 2));
        let s = GroupAlgebraElement::from_terms(&c2, f2(), "1, x").unwrap();
        let m = s.left_matrix();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j), 1);
            }
        }
    }

    #[test]
    fn regular_representation_homomorphism() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let groups = [
            FiniteGroup::alternating4(),
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::cyclic(6).unwrap(),
        ];
        for g in &groups {
            for p in [2u64, 3] {
                let f = PrimeField::new(p).unwrap();
                for _ in 0..10 {
                    let coeffs_a: Vec<i64> =
                        (0..g.order()).map(|_| rng.gen_range(0..p as i64)).collect();
                    let coeffs_b: Vec<i64> =
                        (0..g.order()).map(|_| rng.gen_range(0..p as i64)).collect();
                    let a = GroupAlgebraElement::from_coeffs(g.clone(), f, coeffs_a);
                    let b = GroupAlgebraElement::from_coeffs(g.clone(), f, coeffs_b);
                    let ab = a.product(&b).unwrap();
                    let ba = b.product(&a).unwrap();
                    // L(ab) = L(a)L(b), R(ab) = R(b)R(a)
                    assert_eq!(a.left_matrix().matmul(&b.left_matrix()), ab.left_matrix());
                    assert_eq!(b.right_matrix().matmul(&a.right_matrix()), ab.right_matrix());
                    // left and right actions commute
                    let lr = a.left_matrix().matmul(&b.right_matrix());
                    let rl = b.right_matrix().matmul(&a.left_matrix());
                    assert_eq!(lr, rl);
                    // row and column weights match element weights
                    let la = a.left_matrix();
                    for i in 0..g.order() {
                        assert_eq!(la.row_support(i).len(), a.weight());
                    }
                    drop(ba);
                }
            }
        }
    }

    #[test]
    fn support_subgroups() {
        let g = FiniteGroup::alternating4();
        let zero = GroupAlgebraElement::zero(g.clone(), f2());
        assert!(zero.support_subgroup().is_trivial());
        let a = GroupAlgebraElement::from_terms(&g, f2(), "1, x, y, x^-1*y*x").unwrap();
        assert!(a.support_subgroup().is_whole_group());
        let c6 = FiniteGroup::cyclic(6).unwrap();
        let e = GroupAlgebraElement::from_terms(&c6, f2(), "1, x^2").unwrap();
        assert_eq!(e.support_subgroup().order(), 3);
    }

    #[test]
    fn idempotents() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        assert!(GroupAlgebraElement::unit(c2.clone(), f3()).is_idempotent());
        assert!(GroupAlgebraElement::zero(c2.clone(), f3()).is_idempotent());
        // e = 2*(1+x) over F_3[C_2]: e^2 = 4*(2+2x) = 8+8x = 2+2x = e
        let e = GroupAlgebraElement::from_terms(&c2, f3(), "2, 2*x").unwrap();
        assert!(e.is_idempotent());
        let s = GroupAlgebraElement::from_terms(&c2, f3(), "1, x").unwrap();
        assert!(!s.is_idempotent());
    }

    #[test]
    fn weights() {
        let g = FiniteGroup::alternating4();
        assert_eq!(GroupAlgebraElement::zero(g.clone(), f2()).weight(), 0);
        let b = GroupAlgebraElement::from_terms(&g, f2(), "1, x, y, y*x").unwrap();
        assert_eq!(b.weight(), 4);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let m = GroupAlgebraElement::from_terms(&c2, f3(), "2*x").unwrap();
        assert_eq!(m.weight(), 1);
    }

    #[test]
    fn mismatches_error() {
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let c3 = FiniteGroup::cyclic(3).unwrap();
        let a = GroupAlgebraElement::unit(c2.clone(), f2());
        let b = GroupAlgebraElement::unit(c3, f2());
        assert!(matches!(a.product(&b), Err(Error::MismatchedGroups)));
        let c = GroupAlgebraElement::unit(c2, f3());
        assert!(matches!(a.product(&c), Err(Error::MismatchedFields)));
    }

    #[test]
    fn restricted_matrices() {
        let c6 = FiniteGroup::cyclic(6).unwrap();
        let e = GroupAlgebraElement::from_terms(&c6, f2(), "1, x^2").unwrap();
        let sub = e.support_subgroup();
        let small = e.left_matrix_on(&sub).unwrap();
        assert_eq!((small.rows(), small.cols()), (3, 3));
        // every row has the element's weight
        for i in 0..3 {
            assert_eq!(small.row_support(i).len(), 2);
        }
        // an element not supported in the subgroup is rejected
        let full = GroupAlgebraElement::from_terms(&c6, f2(), "1, x").unwrap();
        assert!(full.left_matrix_on(&sub).is_err());
    }

    #[test]
    fn block_diagonal_under_coset_sort() {
        // sorting rows/columns by right cosets of the support subgroup makes
        // L(a) block-diagonal with |G_a|-sized blocks
        for (group, terms) in [
            (FiniteGroup::cyclic(6).unwrap(), "1, x^3"),
            (FiniteGroup::alternating4(), "1, x, x^2"),
        ] {
            let a = GroupAlgebraElement::from_terms(&group, f2(), terms).unwrap();
            let sub = a.support_subgroup();
            let order = sub.right_coset_order();
            let la = a.left_matrix();
            let sorted = la.submatrix(&order, &order);
            let bs = sub.order();
            let l = group.order();
            for i in 0..l {
                for j in 0..l {
                    if i / bs != j / bs {
                        assert_eq!(sorted.get(i, j), 0, "off-block entry at ({i},{j})");
                    }
                }
            }
        }
    }

    #[test]
    fn term_parsing_and_display_round_trip() {
        let g = FiniteGroup::alternating4();
        let a = GroupAlgebraElement::from_terms(&g, f2(), "1, x, y, x^-1*y*x").unwrap();
        let again = GroupAlgebraElement::from_terms(&g, f2(), &a.to_string()).unwrap();
        assert_eq!(a, again);
        let c2 = FiniteGroup::cyclic(2).unwrap();
        let b = GroupAlgebraElement::from_terms(&c2, f3(), "2, 2*x").unwrap();
        let again = GroupAlgebraElement::from_terms(&c2, f3(), &b.to_string()).unwrap();
        assert_eq!(b, again);
        assert!(GroupAlgebraElement::from_terms(&c2, f3(), "").is_err());
        assert!(GroupAlgebraElement::from_terms(&c2, f3(), "1,,x").is_err());
    }
}
