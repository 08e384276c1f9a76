//! Text and CSV rendering. All output is accumulated into strings and
//! written in one piece, so identical inputs produce byte-identical output.

use qtwoblock_core::{
    CentralIntersectionReport, Classification, CodeReport, Distance, DistanceResult,
    HpEquivalenceReport, TwoBlockCode,
};

pub const CSV_VERSION_COMMENT: &str = "# qtwoblock-csv v1";
pub const CSV_HEADER: &str = "group,p,a,b,n,k,dZ,dZ_exact,dX,dX_exact,label,bound";

pub fn params_block(code: &TwoBlockCode) -> String {
    let r = CodeReport::parameters_only(code);
    let mut out = String::new();
    out.push_str(&format!("code = [[{},{},?]]_{}\n", r.n, r.k, r.q));
    push_common(&mut out, code);
    out
}

fn push_common(out: &mut String, code: &TwoBlockCode) {
    let r = CodeReport::parameters_only(code);
    out.push_str(&format!("n = {}\n", r.n));
    out.push_str(&format!("k = {}\n", r.k));
    out.push_str(&format!("q = {}\n", r.q));
    out.push_str(&format!("rank_hx = {}\n", r.rank_h_x));
    out.push_str(&format!("rank_hz = {}\n", r.rank_h_z));
}

fn witness_text(r: &DistanceResult, binary: bool) -> Option<String> {
    let w = r.witness.as_ref()?;
    let parts: Vec<String> = w
        .support()
        .into_iter()
        .map(|i| if binary { i.to_string() } else { format!("{i}:{}", w.get(i)) })
        .collect();
    Some(parts.join(" "))
}

fn push_side(out: &mut String, side: &str, r: &DistanceResult, witness: bool, binary: bool) {
    out.push_str(&format!("d{side} = {}\n", r.value));
    out.push_str(&format!("d{side}_exact = {}\n", r.exact));
    out.push_str(&format!("d{side}_method = {}\n", r.method.as_str()));
    out.push_str(&format!("d{side}_examined = {}\n", r.examined));
    if let Some(seed) = r.seed {
        out.push_str(&format!("d{side}_seed = {seed}\n"));
    }
    if witness {
        if let Some(w) = witness_text(r, binary) {
            out.push_str(&format!("d{side}_witness = {w}\n"));
        }
    }
}

pub fn distance_block(
    code: &TwoBlockCode,
    dz: DistanceResult,
    dx: DistanceResult,
    witness: bool,
) -> String {
    let report = CodeReport::with_distances(code, dz, dx);
    let (d, exact) = report.d().expect("both sides present");
    let mut out = String::new();
    if exact {
        out.push_str(&format!(
            "code = [[{},{},{}]]_{} (exact)\n",
            report.n, report.k, d, report.q
        ));
    } else {
        out.push_str(&format!(
            "code = [[{},{},d<={}]]_{} (not exact)\n",
            report.n, report.k, d, report.q
        ));
    }
    push_common(&mut out, code);
    let binary = code.field().is_binary();
    push_side(&mut out, "z", report.d_z.as_ref().unwrap(), witness, binary);
    push_side(&mut out, "x", report.d_x.as_ref().unwrap(), witness, binary);
    out.push_str(&format!("d = {d}\n"));
    out.push_str(&format!("d_exact = {exact}\n"));
    out
}

pub fn classify_block(code: &TwoBlockCode, c: &Classification) -> String {
    let mut out = String::new();
    push_common(&mut out, code);
    out.push_str(&format!("label = {}\n", c.label));
    let e = &c.evidence;
    out.push_str(&format!("group_abelian = {}\n", e.group_abelian));
    out.push_str(&format!("support_a_cyclic = {}\n", e.support_a_cyclic));
    out.push_str(&format!("support_b_cyclic = {}\n", e.support_b_cyclic));
    out.push_str(&format!("group_semisimple = {}\n", e.group_semisimple));
    out.push_str(&format!("support_a_semisimple = {}\n", e.support_a_semisimple));
    out.push_str(&format!("support_b_semisimple = {}\n", e.support_b_semisimple));
    out.push_str(&format!("k_odd = {}\n", e.k_odd));
    out
}

pub fn bound_block(
    code: &TwoBlockCode,
    r: &CentralIntersectionReport,
    kernel_bounds: &(DistanceResult, DistanceResult),
) -> String {
    let mut out = String::new();
    push_common(&mut out, code);
    out.push_str(&format!("support_a_order = {}\n", r.support_a.order()));
    out.push_str(&format!("support_b_order = {}\n", r.support_b.order()));
    out.push_str(&format!("intersection_order = {}\n", r.intersection.order()));
    out.push_str(&format!("c = {}\n", r.c));
    out.push_str(&format!("central = {}\n", r.central));
    out.push_str(&format!("gcd_ok = {}\n", r.gcd_ok));
    out.push_str(&format!("d0 = {}\n", r.d0));
    match r.bound {
        Some(b) => out.push_str(&format!("bound = {b}\n")),
        None => out.push_str("bound = n/a\n"),
    }
    out.push_str(&format!("degenerate = {}\n", r.degenerate));
    // the generic kernel bounds, capped by the opposite matrix's row weight
    // since the rows of one generator matrix lie in the other's kernel
    let (for_z, for_x) = kernel_bounds;
    out.push_str(&format!("kernel_bound_dz = {}\n", for_z.value));
    out.push_str(&format!(
        "kernel_bound_dz_cap = {}\n",
        code.h_z().min_row_weight().expect("generator matrix has rows")
    ));
    out.push_str(&format!("kernel_bound_dx = {}\n", for_x.value));
    out.push_str(&format!(
        "kernel_bound_dx_cap = {}\n",
        code.h_x().min_row_weight().expect("generator matrix has rows")
    ));
    out
}

pub fn hpcheck_block(code: &TwoBlockCode, r: &HpEquivalenceReport) -> String {
    let mut out = String::new();
    push_common(&mut out, code);
    out.push_str(&format!("applicable = {}\n", r.applicable));
    out.push_str(&format!("intersection_order = {}\n", r.intersection_order));
    out.push_str(&format!("support_a_order = {}\n", r.support_sizes.0));
    out.push_str(&format!("support_b_order = {}\n", r.support_sizes.1));
    out.push_str(&format!("group_order = {}\n", r.group_order));
    if let (Some(g), Some(h)) = (&r.group_code, &r.hp_code) {
        out.push_str(&format!("group_n = {}\n", g.n));
        out.push_str(&format!("group_k = {}\n", g.k));
        out.push_str(&format!("group_dz = {}\n", g.d_z));
        out.push_str(&format!("group_dx = {}\n", g.d_x));
        out.push_str(&format!("hp_n = {}\n", h.n));
        out.push_str(&format!("hp_k = {}\n", h.k));
        out.push_str(&format!("hp_dz = {}\n", h.d_z));
        out.push_str(&format!("hp_dx = {}\n", h.d_x));
    }
    match r.parameters_match {
        Some(m) => out.push_str(&format!("parameters_match = {m}\n")),
        None => out.push_str("parameters_match = n/a\n"),
    }
    out
}

pub fn csv_quote(field: &str) -> String {
    if field.contains(',') || field.contains('"') || field.contains('\n') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

/// One row of the fixed-order CSV schema.
pub struct CsvRow {
    pub group: String,
    pub p: u32,
    pub a: String,
    pub b: String,
    pub n: usize,
    pub k: usize,
    pub d_z: Option<(Distance, bool)>,
    pub d_x: Option<(Distance, bool)>,
    pub label: String,
    pub bound: String,
}

impl CsvRow {
    pub fn render(&self) -> String {
        let dist = |d: &Option<(Distance, bool)>| match d {
            Some((v, e)) => (v.to_string(), e.to_string()),
            None => (String::new(), String::new()),
        };
        let (dz, dz_exact) = dist(&self.d_z);
        let (dx, dx_exact) = dist(&self.d_x);
        [
            csv_quote(&self.group),
            self.p.to_string(),
            csv_quote(&self.a),
            csv_quote(&self.b),
            self.n.to_string(),
            self.k.to_string(),
            dz,
            dz_exact,
            dx,
            dx_exact,
            csv_quote(&self.label),
            self.bound.clone(),
        ]
        .join(",")
    }
}

pub fn csv_document(rows: &[CsvRow], metadata: Option<&str>) -> String {
    let mut out = String::new();
    out.push_str(CSV_VERSION_COMMENT);
    out.push('\n');
    if let Some(meta) = metadata {
        out.push_str("# ");
        out.push_str(meta);
        out.push('\n');
    }
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&r.render());
        out.push('\n');
    }
    out
}
