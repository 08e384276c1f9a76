//! Parsing of code specification files.
//!
//! A spec file is section-based text; a section header may carry its
//! key/value content inline and commas continue a value unless the next
//! segment starts a new `key =` pair:
//!
//! ```text
//! [field]  p = 2
//! [group]  kind = alternating4
//! [a]      terms = 1, x, y, x^-1*y*x
//! [b]      terms = 1, x, y, y*x
//! ```
//!
//! Alternative sources: `[gb] l = 12, a = 1+x+x^3, b = 1+x^2` for the cyclic
//! construction, or `[blocks] a = <path>, b = <path>` loading raw matrices in
//! the `rows cols p` text format. Exactly one source form must be present.

use crate::algebra::GroupAlgebraElement;
use crate::code::TwoBlockCode;
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::group::{parse_cycles, FiniteGroup};
use crate::poly::FpPoly;
use std::fmt;
use std::path::{Path, PathBuf};

/// How to obtain a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Dihedral(usize),
    Alternating4,
    Product(Vec<GroupSpec>),
    Cayley(PathBuf),
    Perms { degree: usize, gens: Vec<(String, String)> },
}

impl GroupSpec {
    /// Parses the `kind` grammar: `alternating4 | cyclic N | dihedral N |
    /// product <spec>,<spec>[,...] | cayley <path> | perms degree=N
    /// name=(cycles)...`.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        let text = text.trim();
        let (head, rest) = match text.find(char::is_whitespace) {
            Some(i) => (&text[..i], text[i..].trim()),
            None => (text, ""),
        };
        match head {
            "alternating4" => {
                if !rest.is_empty() {
                    return Err(Error::InvalidInput("alternating4 takes no parameters".into()));
                }
                Ok(GroupSpec::Alternating4)
            }
            "cyclic" => Ok(GroupSpec::Cyclic(parse_size(rest, "cyclic")?)),
            "dihedral" => Ok(GroupSpec::Dihedral(parse_size(rest, "dihedral")?)),
            "product" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() < 2 {
                    return Err(Error::InvalidInput(
                        "product needs at least two comma-separated factors".into(),
                    ));
                }
                let factors = parts
                    .iter()
                    .map(|p| GroupSpec::parse(p))
                    .collect::<Result<Vec<_>>>()?;
                if factors.iter().any(|f| matches!(f, GroupSpec::Product(_))) {
                    return Err(Error::InvalidInput(
                        "nested products are written as one flat factor list".into(),
                    ));
                }
                Ok(GroupSpec::Product(factors))
            }
            "cayley" => {
                if rest.is_empty() {
                    return Err(Error::InvalidInput("cayley needs a file path".into()));
                }
                Ok(GroupSpec::Cayley(PathBuf::from(rest)))
            }
            "perms" => parse_perms(rest),
            other => Err(Error::InvalidInput(format!("unknown group kind {other:?}"))),
        }
    }

    /// Builds the group; `base_dir` anchors relative Cayley-file paths.
    pub fn build(&self, base_dir: &Path) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Dihedral(n) => FiniteGroup::dihedral(*n),
            GroupSpec::Alternating4 => Ok(FiniteGroup::alternating4()),
            GroupSpec::Product(factors) => {
                let mut it = factors.iter();
                let mut acc = it.next().expect("at least two factors").build(base_dir)?;
                for f in it {
                    acc = acc.direct_product(&f.build(base_dir)?)?;
                }
                Ok(acc)
            }
            GroupSpec::Cayley(path) => {
                let full = if path.is_absolute() { path.clone() } else { base_dir.join(path) };
                let text = std::fs::read_to_string(&full)?;
                FiniteGroup::from_cayley_text(&text)
            }
            GroupSpec::Perms { degree, gens } => {
                let gens = gens
                    .iter()
                    .map(|(name, cycles)| {
                        Ok((name.clone(), parse_cycles(*degree, cycles)?))
                    })
                    .collect::<Result<Vec<_>>>()?;
                FiniteGroup::from_permutations(*degree, &gens)
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic {n}"),
            GroupSpec::Dihedral(n) => write!(f, "dihedral {n}"),
            GroupSpec::Alternating4 => write!(f, "alternating4"),
            GroupSpec::Product(parts) => {
                write!(f, "product ")?;
                let rendered: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "{}", rendered.join(", "))
            }
            GroupSpec::Cayley(path) => write!(f, "cayley {}", path.display()),
            GroupSpec::Perms { degree, gens } => {
                write!(f, "perms degree={degree}")?;
                for (name, cycles) in gens {
                    write!(f, " {name}={cycles}")?;
                }
                Ok(())
            }
        }
    }
}

fn parse_size(text: &str, kind: &str) -> Result<usize> {
    text.trim()
        .parse()
        .map_err(|_| Error::InvalidInput(format!("{kind} needs a positive integer, got {text:?}")))
}

fn parse_perms(rest: &str) -> Result<GroupSpec> {
    let bytes = rest.as_bytes();
    let mut pos = 0;
    let mut degree: Option<usize> = None;
    let mut gens: Vec<(String, String)> = Vec::new();
    while pos < bytes.len() {
        if bytes[pos].is_ascii_whitespace() {
            pos += 1;
            continue;
        }
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_alphanumeric() || bytes[pos] == b'_') {
            pos += 1;
        }
        if start == pos {
            return Err(Error::InvalidInput(format!(
                "perms: expected a name at {:?}",
                &rest[pos..]
            )));
        }
        let name = &rest[start..pos];
        if pos >= bytes.len() || bytes[pos] != b'=' {
            return Err(Error::InvalidInput(format!("perms: expected '=' after {name}")));
        }
        pos += 1;
        if name == "degree" {
            let dstart = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            degree = Some(
                rest[dstart..pos]
                    .parse()
                    .map_err(|_| Error::InvalidInput("perms: bad degree".into()))?,
            );
        } else {
            let cstart = pos;
            while pos < bytes.len() && bytes[pos] == b'(' {
                while pos < bytes.len() && bytes[pos] != b')' {
                    pos += 1;
                }
                if pos >= bytes.len() {
                    return Err(Error::InvalidInput(format!("perms: unclosed cycle for {name}")));
                }
                pos += 1;
            }
            if cstart == pos {
                return Err(Error::InvalidInput(format!(
                    "perms: expected cycles in parentheses for {name}"
                )));
            }
            gens.push((name.to_string(), rest[cstart..pos].to_string()));
        }
    }
    let degree =
        degree.ok_or_else(|| Error::InvalidInput("perms: missing degree=N".into()))?;
    if gens.is_empty() {
        return Err(Error::InvalidInput("perms: at least one generator required".into()));
    }
    Ok(GroupSpec::Perms { degree, gens })
}

/// Which of the three source forms a spec uses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CodeSource {
    GroupAlgebra { group: GroupSpec, a_terms: String, b_terms: String },
    Bicycle { length: usize, a: String, b: String },
    Blocks { a_path: PathBuf, b_path: PathBuf },
}

/// A parsed code specification.
#[derive(Debug, Clone)]
pub struct CodeSpec {
    pub field: PrimeField,
    pub source: CodeSource,
}

impl CodeSpec {
    pub fn parse(text: &str) -> Result<CodeSpec> {
        let sections = parse_sections(text)?;
        let mut field: Option<(usize, PrimeField)> = None;
        let mut group: Option<(usize, GroupSpec)> = None;
        let mut a_terms: Option<String> = None;
        let mut b_terms: Option<String> = None;
        let mut gb: Option<(usize, usize, String, String)> = None;
        let mut blocks: Option<(PathBuf, PathBuf)> = None;
        for section in &sections {
            let line = section.line;
            match section.name.as_str() {
                "field" => {
                    let p = section.required(line, "p")?;
                    let p: u64 = p
                        .parse()
                        .map_err(|_| Error::spec(line, format!("bad field modulus {p:?}")))?;
                    let f = PrimeField::new(p).map_err(|e| Error::spec(line, e.to_string()))?;
                    field = Some((line, f));
                }
                "group" => {
                    let kind = section.required(line, "kind")?;
                    let g = GroupSpec::parse(kind).map_err(|e| Error::spec(line, e.to_string()))?;
                    group = Some((line, g));
                }
                "a" => a_terms = Some(section.required(line, "terms")?.to_string()),
                "b" => b_terms = Some(section.required(line, "terms")?.to_string()),
                "gb" => {
                    let l = section.required(line, "l")?;
                    let l: usize = l
                        .parse()
                        .map_err(|_| Error::spec(line, format!("bad block length {l:?}")))?;
                    let a = section.required(line, "a")?.to_string();
                    let b = section.required(line, "b")?.to_string();
                    gb = Some((line, l, a, b));
                }
                "blocks" => {
                    let a = PathBuf::from(section.required(line, "a")?);
                    let b = PathBuf::from(section.required(line, "b")?);
                    blocks = Some((a, b));
                }
                other => return Err(Error::spec(line, format!("unknown section [{other}]"))),
            }
        }
        let (field_line, field) =
            field.ok_or_else(|| Error::spec(0, "missing [field] section"))?;
        let _ = field_line;
        let mut sources = 0;
        if group.is_some() || a_terms.is_some() || b_terms.is_some() {
            sources += 1;
        }
        if gb.is_some() {
            sources += 1;
        }
        if blocks.is_some() {
            sources += 1;
        }
        if sources != 1 {
            return Err(Error::spec(
                0,
                "exactly one of [group]+[a]+[b], [gb], or [blocks] must be present",
            ));
        }
        let source = if let Some((line, group)) = group {
            let a_terms =
                a_terms.ok_or_else(|| Error::spec(line, "missing [a] section"))?;
            let b_terms =
                b_terms.ok_or_else(|| Error::spec(line, "missing [b] section"))?;
            CodeSource::GroupAlgebra { group, a_terms, b_terms }
        } else if let Some((_, length, a, b)) = gb {
            CodeSource::Bicycle { length, a, b }
        } else {
            let (a_path, b_path) = blocks.unwrap();
            CodeSource::Blocks { a_path, b_path }
        };
        Ok(CodeSpec { field, source })
    }

    pub fn load(path: &Path) -> Result<CodeSpec> {
        let text = std::fs::read_to_string(path)?;
        CodeSpec::parse(&text)
    }

    /// Builds the code; `base_dir` anchors relative file references.
    pub fn build(&self, base_dir: &Path) -> Result<TwoBlockCode> {
        match &self.source {
            CodeSource::GroupAlgebra { group, a_terms, b_terms } => {
                let g = group.build(base_dir)?;
                let a = GroupAlgebraElement::from_terms(&g, self.field, a_terms)?;
                let b = GroupAlgebraElement::from_terms(&g, self.field, b_terms)?;
                TwoBlockCode::from_group_algebra(&a, &b)
            }
            CodeSource::Bicycle { length, a, b } => {
                let pa = FpPoly::parse(self.field, a)?;
                let pb = FpPoly::parse(self.field, b)?;
                TwoBlockCode::generalized_bicycle(*length, &pa, &pb)
            }
            CodeSource::Blocks { a_path, b_path } => {
                let load = |p: &Path| -> Result<_> {
                    let full = if p.is_absolute() { p.to_path_buf() } else { base_dir.join(p) };
                    let m = crate::linalg::FpMatrix::from_text(&std::fs::read_to_string(full)?)?;
                    if m.field() != self.field {
                        return Err(Error::InvalidInput(format!(
                            "matrix field {} does not match [field] p = {}",
                            m.field(),
                            self.field.p()
                        )));
                    }
                    Ok(m)
                };
                TwoBlockCode::from_blocks(load(a_path)?, load(b_path)?)
            }
        }
    }

    /// Text for the CSV `group` column.
    pub fn group_label(&self) -> String {
        match &self.source {
            CodeSource::GroupAlgebra { group, .. } => group.to_string(),
            CodeSource::Bicycle { length, .. } => format!("cyclic {length}"),
            CodeSource::Blocks { .. } => "blocks".to_string(),
        }
    }

    /// Texts for the CSV `a`/`b` columns.
    pub fn element_labels(&self) -> (String, String) {
        match &self.source {
            CodeSource::GroupAlgebra { a_terms, b_terms, .. } => {
                (a_terms.clone(), b_terms.clone())
            }
            CodeSource::Bicycle { a, b, .. } => (a.clone(), b.clone()),
            CodeSource::Blocks { a_path, b_path } => (
                a_path.display().to_string(),
                b_path.display().to_string(),
            ),
        }
    }
}

struct Section {
    name: String,
    line: usize,
    pairs: Vec<(String, String)>,
}

impl Section {
    fn get(&self, key: &str) -> Option<&str> {
        self.pairs
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    fn required(&self, line: usize, key: &str) -> Result<&str> {
        self.get(key)
            .ok_or_else(|| Error::spec(line, format!("section [{}] is missing {key} =", self.name)))
    }
}

fn is_identifier(s: &str) -> bool {
    !s.is_empty()
        && s.chars().next().unwrap().is_ascii_alphabetic()
        && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits section content into key=value pairs. Comma-separated segments
/// start a new pair only when the text before the first `=` is a bare
/// identifier; otherwise the comma belongs to the previous value (element
/// term lists contain commas).
fn parse_pairs(content: &str, line: usize, pairs: &mut Vec<(String, String)>) -> Result<()> {
    for segment in content.split(',') {
        let new_pair = segment
            .split_once('=')
            .is_some_and(|(lhs, _)| is_identifier(lhs.trim()));
        if new_pair {
            let (lhs, rhs) = segment.split_once('=').unwrap();
            pairs.push((lhs.trim().to_string(), rhs.trim().to_string()));
        } else {
            match pairs.last_mut() {
                Some((_, value)) => {
                    value.push_str(", ");
                    value.push_str(segment.trim());
                }
                None => {
                    return Err(Error::spec(
                        line,
                        format!("expected key = value, got {:?}", segment.trim()),
                    ))
                }
            }
        }
    }
    Ok(())
}

fn parse_sections(text: &str) -> Result<Vec<Section>> {
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = match raw.find('#') {
            Some(h) => &raw[..h],
            None => raw,
        };
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            let Some(close) = rest.find(']') else {
                return Err(Error::spec(line_no, "unterminated section header"));
            };
            let name = rest[..close].trim().to_string();
            if name.is_empty() {
                return Err(Error::spec(line_no, "empty section name"));
            }
            if sections.iter().any(|s| s.name == name) {
                return Err(Error::spec(line_no, format!("duplicate section [{name}]")));
            }
            let mut section = Section { name, line: line_no, pairs: Vec::new() };
            let inline = rest[close + 1..].trim();
            if !inline.is_empty() {
                parse_pairs(inline, line_no, &mut section.pairs)?;
            }
            sections.push(section);
        } else {
            match sections.last_mut() {
                Some(section) => parse_pairs(line, line_no, &mut section.pairs)?,
                None => {
                    return Err(Error::spec(line_no, "content before any section header"))
                }
            }
        }
    }
    if sections.is_empty() {
        return Err(Error::spec(0, "empty spec"));
    }
    Ok(sections)
}
