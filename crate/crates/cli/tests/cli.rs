//! End-to-end tests of the command-line interface: output formats, exit
//! codes, fallback behavior, and CSV row re-validation.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_qtwoblock")
}

fn specs_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../target/cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(exe()).args(args).output().unwrap()
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn params_golden_output_is_pinned() {
    let spec = specs_dir().join("a4.spec");
    let out = run(&["params", spec.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "code = [[24,5,?]]_2\nn = 24\nk = 5\nq = 2\nrank_hx = 10\nrank_hz = 9\n"
    );
}

#[test]
fn distance_gb4_is_exact() {
    let spec = specs_dir().join("gb4.spec");
    let out = run(&["distance", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.starts_with("code = [[4,2,2]]_2 (exact)\n"), "{text}");
    assert!(text.contains("dz = 2\ndz_exact = true\n"), "{text}");
    assert!(text.contains("d = 2\nd_exact = true\n"), "{text}");
}

#[test]
fn witness_lines_report_supports() {
    let spec = specs_dir().join("gb4.spec");
    let out = run(&["distance", spec.to_str().unwrap(), "--witness"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let wline = text
        .lines()
        .find(|l| l.starts_with("dz_witness = "))
        .expect("witness line present");
    let indices: Vec<usize> = wline["dz_witness = ".len()..]
        .split_whitespace()
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(indices.len(), 2, "weight-2 witness expected: {wline}");
    assert!(indices.iter().all(|&i| i < 4));
}

#[test]
fn non_commuting_blocks_exit_2() {
    let dir = scratch("blocks");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("a.mat"), "2 2 2\n0 1\n0 0\n").unwrap();
    std::fs::write(dir.join("b.mat"), "2 2 2\n1 0\n0 0\n").unwrap();
    let spec = dir.join("bad.spec");
    std::fs::write(&spec, "[field] p = 2\n[blocks] a = a.mat, b = b.mat\n").unwrap();
    let out = run(&["params", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("blocks do not commute"), "{}", stderr_of(&out));
}

#[test]
fn missing_spec_exits_2() {
    let out = run(&["params", "/nonexistent/path.spec"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_spec_reports_line() {
    let spec = scratch("broken.spec");
    std::fs::write(&spec, "[field] p = 2\n[group] kind = heptagonal 9\n[a] terms = 1\n[b] terms = 1\n").unwrap();
    let out = run(&["params", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr_of(&out).contains("line 2"), "{}", stderr_of(&out));
}

#[test]
fn budget_exceeded_no_fallback_exits_3() {
    let spec = specs_dir().join("toric3.spec");
    let out = run(&["distance", spec.to_str().unwrap(), "--budget", "16", "--no-fallback"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr_of(&out).contains("budget exceeded"), "{}", stderr_of(&out));
}

#[test]
fn budget_exceeded_falls_back_to_upper_bound() {
    let spec = specs_dir().join("toric3.spec");
    let out = run(&[
        "distance",
        spec.to_str().unwrap(),
        "--budget",
        "16",
        "--iterations",
        "30",
        "--seed",
        "1",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("(not exact)"), "{text}");
    assert!(text.contains("dz_exact = false"), "{text}");
    assert!(text.contains("dz_method = random-information-set"), "{text}");
    assert!(text.contains("dz_seed = 1"), "{text}");
    // the bound can never undercut the true distance of 3
    let dz_line = text.lines().find(|l| l.starts_with("dz = ")).unwrap();
    let dz: usize = dz_line["dz = ".len()..].parse().unwrap();
    assert!(dz >= 3, "{text}");
}

#[test]
fn gb_command_cross_checks_dimension() {
    let out = run(&["gb", "--l", "12", "--a", "1+x+x^3", "--b", "1+x^2", "--p", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("k_consistent = true"), "{text}");
    assert!(text.contains("n = 24"), "{text}");
}

#[test]
fn scan_cyclic2_single_row() {
    let groups = scratch("groups-c2.txt");
    std::fs::write(&groups, "cyclic 2\n").unwrap();
    let out = run(&["scan", "--groups", groups.to_str().unwrap(), "--p", "2", "--wa", "2", "--wb", "2"]);
    assert!(out.status.success());
    assert_eq!(
        stdout_of(&out),
        "# qtwoblock-csv v1\n\
         # scan p=2 wa=2 wb=2 min_weight=2 anchored=true seed=0 budget=67108864 iterations=100\n\
         group,p,a,b,n,k,dZ,dZ_exact,dX,dX_exact,label,bound\n\
         cyclic 2,2,\"1, x\",\"1, x\",4,2,2,true,2,true,abelian,\n"
    );
}

#[test]
fn scan_cyclic3_contains_expected_rows() {
    let groups = scratch("groups-c3.txt");
    std::fs::write(&groups, "cyclic 3\n").unwrap();
    let out = run(&["scan", "--groups", groups.to_str().unwrap(), "--p", "2", "--wa", "3", "--wb", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    // a k=2 row from the coprime pair and k=0 rows from the full-support pair
    assert!(
        text.contains("cyclic 3,2,\"1, x\",\"1, x^2\",6,2,2,true,2,true,abelian,1"),
        "{text}"
    );
    assert!(text.contains(",6,0,inf,true,inf,true,abelian,"), "{text}");
}

/// Splits one CSV record, honoring quoted fields.
fn split_csv(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut cur = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        if quoted {
            if c == '"' {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    cur.push('"');
                } else {
                    quoted = false;
                }
            } else {
                cur.push(c);
            }
        } else if c == '"' {
            quoted = true;
        } else if c == ',' {
            fields.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    fields.push(cur);
    fields
}

#[test]
fn csv_rows_revalidate_through_params() {
    // scan a group, rebuild a spec from each CSV row, and check that params
    // reproduces the row's n and k
    let groups = scratch("groups-reval.txt");
    std::fs::write(&groups, "product cyclic 2, cyclic 2\n").unwrap();
    let out = run(&["scan", "--groups", groups.to_str().unwrap(), "--p", "2", "--wa", "2", "--wb", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let rows: Vec<&str> = text.lines().skip(3).collect();
    assert!(!rows.is_empty());
    for (i, row) in rows.iter().enumerate() {
        let fields = split_csv(row);
        let (group, p, a, b, n, k) =
            (&fields[0], &fields[1], &fields[2], &fields[3], &fields[4], &fields[5]);
        let spec = scratch(&format!("reval-{i}.spec"));
        std::fs::write(
            &spec,
            format!("[field] p = {p}\n[group] kind = {group}\n[a] terms = {a}\n[b] terms = {b}\n"),
        )
        .unwrap();
        let pout = run(&["params", spec.to_str().unwrap()]);
        assert!(pout.status.success(), "row {i}: {row}");
        let ptext = stdout_of(&pout);
        assert!(ptext.contains(&format!("\nn = {n}\n")), "row {i}: {ptext}");
        assert!(ptext.contains(&format!("\nk = {k}\n")), "row {i}: {ptext}");
    }
}

#[test]
fn classify_csv_appends_versioned_file() {
    let csv = scratch("classify-out.csv");
    std::fs::remove_file(&csv).ok();
    let spec = specs_dir().join("a4.spec");
    let out = run(&["classify", spec.to_str().unwrap(), "--csv", csv.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("label = essentially-non-abelian"));
    let written = std::fs::read_to_string(&csv).unwrap();
    let mut lines = written.lines();
    assert_eq!(lines.next(), Some("# qtwoblock-csv v1"));
    assert_eq!(
        lines.next(),
        Some("group,p,a,b,n,k,dZ,dZ_exact,dX,dX_exact,label,bound")
    );
    let row = lines.next().unwrap();
    assert!(row.contains("alternating4"), "{row}");
    assert!(row.contains("essentially-non-abelian"), "{row}");
}

#[test]
fn bound_command_reports_applicability() {
    let spec = specs_dir().join("c2_f3.spec");
    let out = run(&["bound", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("c = 2"), "{text}");
    assert!(text.contains("gcd_ok = true"), "{text}");
    assert!(text.contains("bound = 1"), "{text}");
    // generic kernel bounds with their row-weight caps
    assert!(text.contains("kernel_bound_dz = 2"), "{text}");
    assert!(text.contains("kernel_bound_dz_cap = 4"), "{text}");
    assert!(text.contains("kernel_bound_dx = 2"), "{text}");
    // same group over F_2 fails the coprimality condition
    let spec = specs_dir().join("gb4.spec");
    let out = run(&["bound", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("gcd_ok = false"), "{text}");
    assert!(text.contains("bound = n/a"), "{text}");
}

#[test]
fn hpcheck_klein_matches() {
    let spec = specs_dir().join("klein.spec");
    let out = run(&["hpcheck", spec.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("applicable = true"), "{text}");
    assert!(text.contains("parameters_match = true"), "{text}");
}

#[test]
fn dump_matrices_writes_reloadable_files() {
    let dir = scratch("dump");
    std::fs::remove_dir_all(&dir).ok();
    let spec = specs_dir().join("gb4.spec");
    let out = run(&["params", spec.to_str().unwrap(), "--dump-matrices", dir.to_str().unwrap()]);
    assert!(out.status.success());
    for name in ["a.mat", "b.mat", "hx.mat", "hz.mat"] {
        let text = std::fs::read_to_string(dir.join(name)).unwrap();
        let header = text.lines().next().unwrap();
        assert!(header.ends_with(" 2"), "{name}: {header}");
    }
    let hx = std::fs::read_to_string(dir.join("hx.mat")).unwrap();
    assert!(hx.starts_with("2 4 2\n"), "{hx}");
}

#[test]
fn unknown_subcommand_exits_2() {
    let out = run(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cayley_file_group_through_spec() {
    let dir = scratch("cayley");
    std::fs::create_dir_all(&dir).unwrap();
    let table = qtwoblock_core::FiniteGroup::dihedral(3).unwrap().to_cayley_text();
    std::fs::write(dir.join("d3.cayley"), table).unwrap();
    let spec = dir.join("d3.spec");
    std::fs::write(
        &spec,
        "[field] p = 2\n[group] kind = cayley d3.cayley\n[a] terms = 1, r\n[b] terms = 1, s\n",
    )
    .unwrap();
    let out = run(&["params", spec.to_str().unwrap()]);
    assert!(out.status.success(), "{}", stderr_of(&out));
    assert!(stdout_of(&out).contains("n = 12"), "{}", stdout_of(&out));
}

#[test]
fn perms_group_through_spec() {
    let spec = scratch("perm.spec");
    std::fs::write(
        &spec,
        "[field] p = 2\n[group] kind = perms degree=4 x=(0 1 2) y=(0 1)(2 3)\n\
         [a] terms = 1, x, y, x^-1*y*x\n[b] terms = 1, x, y, y*x\n",
    )
    .unwrap();
    let out = run(&["params", spec.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("code = [[24,5,?]]_2"), "{}", stdout_of(&out));
}

#[test]
fn witness_over_f3_uses_index_value_pairs() {
    let spec = specs_dir().join("c2_f3.spec");
    let out = run(&["distance", spec.to_str().unwrap(), "--witness"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let wline = text.lines().find(|l| l.starts_with("dz_witness = ")).unwrap();
    assert!(wline.contains(':'), "p > 2 witnesses carry values: {wline}");
}

#[test]
fn dumped_blocks_rebuild_the_same_code() {
    let dir = scratch("roundtrip");
    std::fs::remove_dir_all(&dir).ok();
    let spec = specs_dir().join("toric3.spec");
    let out = run(&["params", spec.to_str().unwrap(), "--dump-matrices", dir.to_str().unwrap()]);
    assert!(out.status.success());
    let original = stdout_of(&out);
    let reblocked = dir.join("re.spec");
    std::fs::write(&reblocked, "[field] p = 2\n[blocks] a = a.mat, b = b.mat\n").unwrap();
    let out = run(&["params", reblocked.to_str().unwrap()]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out), original, "raw-block import reproduces the code");
}

#[test]
fn large_bicycle_fallback_quality() {
    // a published-family instance: the gcd dimension gives k = 28 and the
    // randomized bound lands on the known distance 8 quickly
    let out = run(&[
        "gb", "--l", "63",
        "--a", "1+x+x^14+x^16+x^22",
        "--b", "1+x^3+x^13+x^20+x^42",
        "--p", "2", "--iterations", "200", "--seed", "0",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("n = 126"), "{text}");
    assert!(text.contains("k = 28"), "{text}");
    assert!(text.contains("k_consistent = true"), "{text}");
    assert!(text.contains("dz_method = random-information-set"), "{text}");
    let d_line = text.lines().find(|l| l.starts_with("d = ")).unwrap();
    let d: usize = d_line["d = ".len()..].parse().unwrap();
    assert!((8..=12).contains(&d), "upper bound {d} out of the plausible range");
}

#[test]
fn classify_rejects_raw_blocks() {
    let dir = scratch("rawclass");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("i.mat"), "2 2 2\n1 0\n0 1\n").unwrap();
    let spec = dir.join("raw.spec");
    std::fs::write(&spec, "[field] p = 2\n[blocks] a = i.mat, b = i.mat\n").unwrap();
    let out = run(&["classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(
        stderr_of(&out).contains("classification requires group provenance"),
        "{}",
        stderr_of(&out)
    );
}
