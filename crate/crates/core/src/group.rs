//! Finite groups as explicit Cayley tables, with named generators and the
//! subgroup machinery used by the code constructions.
//!
//! Element 0 is always the identity. Elements are discovered by breadth-first
//! closure over the generators (identity first, then products
//! `existing * generator` in generator order), so element order is
//! deterministic for a given generator list. The group product follows the
//! permutation-composition convention `(u*v)(point) = v(u(point))`: apply the
//! left factor first.

use crate::error::{Error, Result};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Closure cap for group construction; Cayley tables are O(order^2).
pub const DEFAULT_GROUP_CAP: usize = 10_000;

#[derive(Debug)]
struct GroupInner {
    order: usize,
    /// Row-major order*order table; cayley[i*order + j] = index of g_i * g_j.
    cayley: Vec<u32>,
    inverse: Vec<u32>,
    /// Named generators in declaration order.
    generators: Vec<(String, usize)>,
    /// Per element, a generator-index word reaching it from the identity,
    /// or None when the declared generators do not reach it (possible only
    /// for table-file input).
    words: Vec<Option<Vec<usize>>>,
    /// Whether `g<i>` fallback element names are accepted by the word parser
    /// (enabled for table-file groups).
    element_names: bool,
}

/// A finite group; cheap to clone and share.
#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupInner>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order={})", self.order())
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.order == other.inner.order && self.inner.cayley == other.inner.cayley)
    }
}
impl Eq for FiniteGroup {}

/// Composition of permutations: apply `u` first, then `v`.
pub(crate) fn compose(u: &[usize], v: &[usize]) -> Vec<usize> {
    u.iter().map(|&p| v[p]).collect()
}

fn is_permutation(p: &[usize]) -> bool {
    let mut seen = vec![false; p.len()];
    for &v in p {
        if v >= p.len() || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

/// Parses disjoint-cycle notation such as `(0 1 2)(3 4)` into a permutation
/// of `0..degree`. An empty string or `()` is the identity.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Vec<usize>> {
    let mut perm: Vec<usize> = (0..degree).collect();
    let bytes = text.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        if bytes[pos] != b'(' {
            return Err(Error::parse(pos, "expected '(' starting a cycle"));
        }
        pos += 1;
        let mut cycle: Vec<usize> = Vec::new();
        loop {
            while pos < bytes.len() && bytes[pos].is_ascii_whitespace() {
                pos += 1;
            }
            if pos < bytes.len() && bytes[pos] == b')' {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            if start == pos {
                return Err(Error::parse(pos, "expected a point index"));
            }
            let v: usize =
                text[start..pos].parse().map_err(|_| Error::parse(start, "index too large"))?;
            if v >= degree {
                return Err(Error::parse(start, format!("point {v} exceeds degree {degree}")));
            }
            if cycle.contains(&v) {
                return Err(Error::parse(start, format!("point {v} repeated in cycle")));
            }
            cycle.push(v);
        }
        for w in cycle.windows(2) {
            perm[w[0]] = w[1];
        }
        if cycle.len() > 1 {
            perm[*cycle.last().unwrap()] = cycle[0];
        }
    }
    if !is_permutation(&perm) {
        return Err(Error::parse(0, "cycles are not disjoint"));
    }
    Ok(perm)
}

fn words_from_generators(
    order: usize,
    cayley: &[u32],
    generators: &[(String, usize)],
) -> Vec<Option<Vec<usize>>> {
    let mut words: Vec<Option<Vec<usize>>> = vec![None; order];
    words[0] = Some(Vec::new());
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(e) = queue.pop_front() {
        for (gi, &(_, g)) in generators.iter().enumerate() {
            let w = cayley[e * order + g] as usize;
            if words[w].is_none() {
                let mut path = words[e].clone().unwrap();
                path.push(gi);
                words[w] = Some(path);
                queue.push_back(w);
            }
        }
    }
    words
}

impl FiniteGroup {
    fn build(
        order: usize,
        cayley: Vec<u32>,
        generators: Vec<(String, usize)>,
        element_names: bool,
    ) -> Result<Self> {
        let inverse = validate_table(order, &cayley)?;
        for (name, idx) in &generators {
            if *idx >= order {
                return Err(Error::InvalidGroup(format!(
                    "generator {name} index {idx} out of range"
                )));
            }
        }
        let words = words_from_generators(order, &cayley, &generators);
        Ok(FiniteGroup {
            inner: Arc::new(GroupInner { order, cayley, inverse, generators, words, element_names }),
        })
    }

    /// Closes a set of named permutations under composition. Deterministic
    /// element order: identity, then breadth-first products in generator
    /// order.
    pub fn from_permutations(degree: usize, gens: &[(String, Vec<usize>)]) -> Result<Self> {
        Self::from_permutations_capped(degree, gens, DEFAULT_GROUP_CAP)
    }

    pub fn from_permutations_capped(
        degree: usize,
        gens: &[(String, Vec<usize>)],
        cap: usize,
    ) -> Result<Self> {
        if degree > DEFAULT_GROUP_CAP {
            return Err(Error::InvalidGroup(format!(
                "permutation degree {degree} exceeds the cap of {DEFAULT_GROUP_CAP}"
            )));
        }
        for (name, p) in gens {
            if p.len() != degree || !is_permutation(p) {
                return Err(Error::InvalidGroup(format!("{name} is not a permutation of 0..{degree}")));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut elems: Vec<Vec<usize>> = vec![identity.clone()];
        let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(identity, 0)]);
        let mut head = 0;
        while head < elems.len() {
            let current = elems[head].clone();
            for (_, g) in gens {
                let w = compose(&current, g);
                if !index.contains_key(&w) {
                    if elems.len() >= cap {
                        return Err(Error::GroupTooLarge { cap });
                    }
                    index.insert(w.clone(), elems.len());
                    elems.push(w);
                }
            }
            head += 1;
        }
        let order = elems.len();
        let mut cayley = vec![0u32; order * order];
        for (i, a) in elems.iter().enumerate() {
            for (j, b) in elems.iter().enumerate() {
                cayley[i * order + j] = index[&compose(a, b)] as u32;
            }
        }
        let generators = gens
            .iter()
            .map(|(name, p)| (name.clone(), index[p]))
            .collect();
        Self::build(order, cayley, generators, false)
    }

    /// The cyclic group C_l with generator `x`.
    pub fn cyclic(l: usize) -> Result<Self> {
        if l == 0 {
            return Err(Error::InvalidGroup("cyclic group order must be positive".into()));
        }
        let shift: Vec<usize> = (0..l).map(|i| (i + 1) % l).collect();
        Self::from_permutations(l, &[("x".into(), shift)])
    }

    /// The dihedral group of order 2n with rotation `r` and reflection `s`.
    pub fn dihedral(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("dihedral parameter must be positive".into()));
        }
        if n == 1 {
            // order 2; the reflection alone
            return Self::from_permutations(2, &[("r".into(), vec![0, 1]), ("s".into(), vec![1, 0])]);
        }
        if n == 2 {
            // the vertex action i -> -i fixes both points of a 2-gon, so
            // realize the order-4 group on 4 points instead
            return Self::from_permutations(
                4,
                &[("r".into(), vec![1, 0, 3, 2]), ("s".into(), vec![2, 3, 0, 1])],
            );
        }
        let r: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        let s: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
        Self::from_permutations(n, &[("r".into(), r), ("s".into(), s)])
    }

    /// The alternating group A_4 with x = (0 1 2), y = (0 1)(2 3).
    /// The presentation relations x^3 = (yx)^3 = y^2 = 1 are asserted.
    pub fn alternating4() -> Self {
        let g = Self::from_permutations(
            4,
            &[("x".into(), vec![1, 2, 0, 3]), ("y".into(), vec![1, 0, 3, 2])],
        )
        .expect("A4 generators are valid permutations");
        assert_eq!(g.order(), 12);
        let x = g.generator("x").unwrap();
        let y = g.generator("y").unwrap();
        let yx = g.mul(y, x);
        assert_eq!(g.mul(g.mul(x, x), x), 0, "x^3 = 1");
        assert_eq!(g.mul(y, y), 0, "y^2 = 1");
        assert_eq!(g.mul(g.mul(yx, yx), yx), 0, "(yx)^3 = 1");
        g
    }

    /// Direct product. Generator names from the right factor that collide
    /// with names already taken are renamed to the first free name in
    /// x, y, z, w, u, v, s, t (then `<name>2`, `<name>3`, ...).
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<Self> {
        let (la, lb) = (self.order(), other.order());
        let order = la
            .checked_mul(lb)
            .filter(|&o| o <= DEFAULT_GROUP_CAP)
            .ok_or(Error::GroupTooLarge { cap: DEFAULT_GROUP_CAP })?;
        let mut cayley = vec![0u32; order * order];
        let pair = |i: usize, j: usize| i * lb + j;
        for i1 in 0..la {
            for j1 in 0..lb {
                for i2 in 0..la {
                    for j2 in 0..lb {
                        cayley[pair(i1, j1) * order + pair(i2, j2)] =
                            pair(self.mul(i1, i2), other.mul(j1, j2)) as u32;
                    }
                }
            }
        }
        let mut generators: Vec<(String, usize)> = Vec::new();
        let mut taken: Vec<String> = Vec::new();
        let add = |name: &str, idx: usize, taken: &mut Vec<String>, gens: &mut Vec<(String, usize)>| {
            let fresh = if !taken.iter().any(|t| t == name) {
                name.to_string()
            } else {
                const POOL: [&str; 8] = ["x", "y", "z", "w", "u", "v", "s", "t"];
                POOL.iter()
                    .map(|s| s.to_string())
                    .chain((2..).map(|k| format!("{name}{k}")))
                    .find(|cand| !taken.iter().any(|t| t == cand))
                    .unwrap()
            };
            taken.push(fresh.clone());
            gens.push((fresh, idx));
        };
        for (name, g) in self.generators() {
            add(name, pair(*g, 0), &mut taken, &mut generators);
        }
        for (name, h) in other.generators() {
            add(name, pair(0, *h), &mut taken, &mut generators);
        }
        Self::build(order, cayley, generators, false)
    }

    /// Parses the Cayley-table text format: first line `order l`, then l
    /// lines of l indices, then optional `gen <name> <index>` lines.
    pub fn from_cayley_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::InvalidGroup("empty table file".into()))?;
        let mut it = header.split_whitespace();
        let order: usize = match (it.next(), it.next()) {
            (Some("order"), Some(n)) => n
                .parse()
                .map_err(|_| Error::InvalidGroup(format!("bad order value {n}")))?,
            _ => return Err(Error::InvalidGroup("first line must be 'order <l>'".into())),
        };
        if order == 0 || order > DEFAULT_GROUP_CAP {
            return Err(Error::InvalidGroup(format!("order {order} out of range")));
        }
        let mut cayley = Vec::with_capacity(order * order);
        for r in 0..order {
            let line = lines
                .next()
                .ok_or_else(|| Error::InvalidGroup(format!("missing table row {r}")))?;
            let row: Vec<u32> = line
                .split_whitespace()
                .map(|t| t.parse::<u32>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::InvalidGroup(format!("bad entry in row {r}")))?;
            if row.len() != order {
                return Err(Error::InvalidGroup(format!(
                    "row {r} has {} entries, expected {order}",
                    row.len()
                )));
            }
            cayley.extend(row);
        }
        let mut generators = Vec::new();
        for line in lines {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["gen", name, idx] => {
                    let idx: usize = idx
                        .parse()
                        .map_err(|_| Error::InvalidGroup(format!("bad generator index {idx}")))?;
                    generators.push((name.to_string(), idx));
                }
                _ => return Err(Error::InvalidGroup(format!("unrecognized line: {line}"))),
            }
        }
        Self::build(order, cayley, generators, true)
    }

    pub fn to_cayley_text(&self) -> String {
        let l = self.order();
        let mut out = format!("order {l}\n");
        for i in 0..l {
            let row: Vec<String> =
                (0..l).map(|j| self.mul(i, j).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        for (name, idx) in self.generators() {
            out.push_str(&format!("gen {name} {idx}\n"));
        }
        out
    }

    /// Relabels elements by `perm` (old index -> new index); `perm[0]` must
    /// be 0 so the identity stays at index 0. Code parameters are invariant
    /// under relabeling.
    pub fn relabeled(&self, perm: &[usize]) -> Result<Self> {
        let l = self.order();
        if perm.len() != l || !is_permutation(perm) {
            return Err(Error::InvalidGroup("relabeling is not a permutation".into()));
        }
        if perm[0] != 0 {
            return Err(Error::InvalidGroup("relabeling must fix the identity".into()));
        }
        let mut cayley = vec![0u32; l * l];
        for i in 0..l {
            for j in 0..l {
                cayley[perm[i] * l + perm[j]] = perm[self.mul(i, j)] as u32;
            }
        }
        let generators = self
            .generators()
            .iter()
            .map(|(n, g)| (n.clone(), perm[*g]))
            .collect();
        Self::build(l, cayley, generators, self.inner.element_names)
    }

    pub fn order(&self) -> usize {
        self.inner.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.inner.cayley[i * self.inner.order + j] as usize
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inner.inverse[i] as usize
    }

    pub fn generators(&self) -> &[(String, usize)] {
        &self.inner.generators
    }

    pub fn generator(&self, name: &str) -> Option<usize> {
        self.inner
            .generators
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, i)| *i)
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut acc = i;
        let mut n = 1;
        while acc != 0 {
            acc = self.mul(acc, i);
            n += 1;
        }
        n
    }

    pub fn is_abelian(&self) -> bool {
        let l = self.order();
        (0..l).all(|i| (i..l).all(|j| self.mul(i, j) == self.mul(j, i)))
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|i| self.element_order(i) == self.order())
    }

    pub fn center(&self) -> Subgroup {
        let l = self.order();
        let members: Vec<usize> = (0..l)
            .filter(|&z| (0..l).all(|g| self.mul(z, g) == self.mul(g, z)))
            .collect();
        Subgroup { parent: self.clone(), members }
    }

    /// Smallest subgroup containing the seeds; empty seeds give {identity}.
    pub fn subgroup_generated(&self, seeds: &[usize]) -> Subgroup {
        let mut in_set = vec![false; self.order()];
        in_set[0] = true;
        let mut members = vec![0usize];
        let mut head = 0;
        while head < members.len() {
            let e = members[head];
            for &s in seeds {
                let w = self.mul(e, s);
                if !in_set[w] {
                    in_set[w] = true;
                    members.push(w);
                }
            }
            head += 1;
        }
        members.sort_unstable();
        Subgroup { parent: self.clone(), members }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup { parent: self.clone(), members: vec![0] }
    }

    pub fn is_normal(&self, s: &Subgroup) -> Result<bool> {
        if s.parent != *self {
            return Err(Error::MismatchedGroups);
        }
        Ok((0..self.order()).all(|g| {
            s.members
                .iter()
                .all(|&h| s.contains(self.mul(self.mul(g, h), self.inv(g))))
        }))
    }

    pub fn is_central(&self, s: &Subgroup) -> Result<bool> {
        if s.parent != *self {
            return Err(Error::MismatchedGroups);
        }
        let center = self.center();
        Ok(s.members.iter().all(|&m| center.contains(m)))
    }

    /// Parses a word in the generators: `1` or `factor (* factor)*` with
    /// `factor = name (^ signed-integer)?`. Errors carry byte offsets.
    pub fn parse_word(&self, text: &str) -> Result<usize> {
        let bytes = text.as_bytes();
        let mut pos = 0;
        let skip_ws = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        skip_ws(&mut pos);
        if pos == bytes.len() {
            return Err(Error::parse(pos, "empty word"));
        }
        // identity literal
        if bytes[pos] == b'1' {
            let after = pos + 1;
            let mut probe = after;
            skip_ws(&mut probe);
            if probe == bytes.len() {
                return Ok(0);
            }
            return Err(Error::parse(after, "unexpected input after identity literal"));
        }
        let mut acc = 0usize;
        loop {
            skip_ws(&mut pos);
            let start = pos;
            while pos < bytes.len()
                && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_')
            {
                pos += 1;
            }
            if start == pos {
                return Err(Error::parse(start, "expected a generator name"));
            }
            let name = &text[start..pos];
            let base = match self.generator(name) {
                Some(i) => i,
                None => match self.fallback_element(name) {
                    Some(i) => i,
                    None => {
                        return Err(Error::parse(start, format!("unknown generator {name}")))
                    }
                },
            };
            let mut exponent: i64 = 1;
            skip_ws(&mut pos);
            if pos < bytes.len() && bytes[pos] == b'^' {
                pos += 1;
                skip_ws(&mut pos);
                let sign_start = pos;
                let mut sign = 1i64;
                if pos < bytes.len() && (bytes[pos] == b'-' || bytes[pos] == b'+') {
                    if bytes[pos] == b'-' {
                        sign = -1;
                    }
                    pos += 1;
                }
                let dstart = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                if dstart == pos {
                    return Err(Error::parse(sign_start.max(dstart), "expected exponent digits"));
                }
                let mag: i64 = text[dstart..pos]
                    .parse()
                    .map_err(|_| Error::parse(dstart, "exponent too large"))?;
                exponent = sign * mag;
            }
            acc = self.mul(acc, self.power(base, exponent));
            skip_ws(&mut pos);
            if pos == bytes.len() {
                return Ok(acc);
            }
            if bytes[pos] != b'*' {
                return Err(Error::parse(pos, "expected '*' between factors"));
            }
            pos += 1;
        }
    }

    fn fallback_element(&self, name: &str) -> Option<usize> {
        if !self.inner.element_names {
            return None;
        }
        let idx: usize = name.strip_prefix('g')?.parse().ok()?;
        (idx < self.order()).then_some(idx)
    }

    pub fn power(&self, base: usize, e: i64) -> usize {
        let ord = self.element_order(base) as i64;
        let e = e.rem_euclid(ord) as usize;
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, base);
        }
        acc
    }

    /// A canonical word reaching element `i` from the generators, with runs
    /// collapsed into powers. Falls back to `g<i>` when the generators do
    /// not reach it.
    pub fn word_for(&self, i: usize) -> String {
        if i == 0 {
            return "1".into();
        }
        match &self.inner.words[i] {
            None => format!("g{i}"),
            Some(path) => {
                let mut parts: Vec<String> = Vec::new();
                let mut run: Option<(usize, usize)> = None;
                for &gi in path {
                    match run {
                        Some((cur, n)) if cur == gi => run = Some((cur, n + 1)),
                        Some((cur, n)) => {
                            parts.push(render_power(&self.inner.generators[cur].0, n));
                            run = Some((gi, 1));
                        }
                        None => run = Some((gi, 1)),
                    }
                }
                if let Some((cur, n)) = run {
                    parts.push(render_power(&self.inner.generators[cur].0, n));
                }
                parts.join("*")
            }
        }
    }
}

fn render_power(name: &str, n: usize) -> String {
    if n == 1 {
        name.to_string()
    } else {
        format!("{name}^{n}")
    }
}

fn validate_table(order: usize, cayley: &[u32]) -> Result<Vec<u32>> {
    if cayley.len() != order * order {
        return Err(Error::InvalidGroup("table size mismatch".into()));
    }
    if cayley.iter().any(|&v| v as usize >= order) {
        return Err(Error::InvalidGroup("table entry out of range".into()));
    }
    let at = |i: usize, j: usize| cayley[i * order + j] as usize;
    // identity row and column
    for i in 0..order {
        if at(0, i) != i || at(i, 0) != i {
            return Err(Error::InvalidGroup("row/column 0 is not the identity".into()));
        }
    }
    // Latin square
    let mut seen = vec![false; order];
    for i in 0..order {
        seen.fill(false);
        for j in 0..order {
            let v = at(i, j);
            if seen[v] {
                return Err(Error::InvalidGroup(format!("row {i} is not a permutation")));
            }
            seen[v] = true;
        }
        seen.fill(false);
        for j in 0..order {
            let v = at(j, i);
            if seen[v] {
                return Err(Error::InvalidGroup(format!("column {i} is not a permutation")));
            }
            seen[v] = true;
        }
    }
    // associativity: exhaustive for order <= 256, sampled above
    if order <= 256 {
        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::InvalidGroup(format!(
                            "associativity fails at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
    } else {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state as usize % order
        };
        for _ in 0..1_000_000 {
            let (a, b, c) = (next(), next(), next());
            if at(at(a, b), c) != at(a, at(b, c)) {
                return Err(Error::InvalidGroup(format!(
                    "associativity fails at ({a},{b},{c})"
                )));
            }
        }
    }
    // inverses
    let mut inverse = vec![0u32; order];
    for (i, slot) in inverse.iter_mut().enumerate() {
        match (0..order).find(|&j| at(i, j) == 0) {
            Some(j) => *slot = j as u32,
            None => return Err(Error::InvalidGroup(format!("element {i} has no inverse"))),
        }
    }
    Ok(inverse)
}

/// A subgroup, stored as a sorted member list tied to its parent group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: Vec<usize>,
}

impl Subgroup {
    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.members == [0]
    }

    /// Whether some member generates the whole subgroup.
    pub fn is_cyclic(&self) -> bool {
        self.members
            .iter()
            .any(|&m| self.parent.element_order(m) == self.order())
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.parent != other.parent {
            return Err(Error::MismatchedGroups);
        }
        let members: Vec<usize> = self
            .members
            .iter()
            .copied()
            .filter(|&m| other.contains(m))
            .collect();
        Ok(Subgroup { parent: self.parent.clone(), members })
    }

    /// The parent's elements reordered so that right cosets S*g are
    /// contiguous, each in member order. Applying this as a simultaneous
    /// row/column permutation makes the left action of an element supported
    /// in S block-diagonal with |S|-sized blocks.
    pub fn right_coset_order(&self) -> Vec<usize> {
        let g = &self.parent;
        let mut seen = vec![false; g.order()];
        let mut order = Vec::with_capacity(g.order());
        for rep in 0..g.order() {
            if seen[rep] {
                continue;
            }
            for &h in &self.members {
                let e = g.mul(h, rep);
                seen[e] = true;
                order.push(e);
            }
        }
        order
    }
}
