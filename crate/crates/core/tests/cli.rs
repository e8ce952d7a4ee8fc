mod common;

use std::fs;
use std::path::PathBuf;

use tempfile::TempDir;

use phylosem::cli::run;
use phylosem::graph::caterpillar;
use phylosem::semigroup::{member, Labelling};

use common::{all_labellings, trivalent_member};

fn phylosem(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("phylosem").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let path: PathBuf = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path.to_string_lossy().into_owned()
}

const TRIPOD: &str = "edge e1 c x\nedge e2 c y\nedge e3 c z\n";

#[test]
fn betti() {
    assert_eq!(phylosem(&["betti", "--g", "3"]), (0, "3\n".into(), String::new()));
    let dir = TempDir::new().unwrap();
    let theta = write(&dir, "theta.txt", "edge a u v\nedge b u v\nedge c u v\n");
    assert_eq!(phylosem(&["betti", &theta]).1, "2\n");
}

#[test]
fn member_verdicts() {
    let dir = TempDir::new().unwrap();
    let tripod = write(&dir, "tripod.txt", TRIPOD);
    let yes = write(&dir, "yes.txt", "degree 2\ne1 2\ne2 1\ne3 1\n");
    let no = write(&dir, "no.txt", "degree 1\ne1 1\ne2 1\ne3 1\n");
    let (code, out, _) = phylosem(&["member", &tripod, "--labelling", &yes]);
    assert_eq!((code, out.as_str()), (0, "member: yes\n"));
    for method in ["auto", "inequalities", "decompose"] {
        let (code, out, _) = phylosem(&["member", &tripod, "--labelling", &no, "--method", method]);
        assert_eq!(code, 1);
        assert!(out.starts_with("member: no\ncondition: parity"), "{out}");
    }
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let tripod = write(&dir, "tripod.txt", TRIPOD);
    let bad = write(&dir, "bad.txt", "degree 2\ne1 2\ne9 1\n");
    let (code, _, err) = phylosem(&["member", &tripod, "--labelling", &bad]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    let broken = write(&dir, "broken.txt", "edge e1 c x\nedge e1 c y\n");
    let (code, _, err) = phylosem(&["betti", &broken]);
    assert_eq!(code, 2);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(phylosem(&["betti"]).0, 2);
    assert_eq!(phylosem(&["no-such-verb"]).0, 2);
    let (code, _, err) = phylosem(&["generators", &broken, "--g", "2"]);
    assert_eq!(code, 2, "{err}");
}

fn parts(certificate: &str, g: &phylosem::Graph) -> (Labelling, Labelling) {
    let (first, rest) = certificate.split_once("# part 2\n").unwrap();
    let (second, check) = rest.split_once("sum-check").unwrap();
    assert_eq!(check, ": ok\n");
    (Labelling::parse(g, first).unwrap(), Labelling::parse(g, second).unwrap())
}

#[test]
fn split_high_degree() {
    let dir = TempDir::new().unwrap();
    let g = caterpillar(1).unwrap();
    let w = write(&dir, "w.txt", "degree 3\nl 2\no1 2\n");
    let (code, out, _) = phylosem(&["split", "--g", "1", "--labelling", &w]);
    assert_eq!(code, 0);
    let (a, b) = parts(&out, &g);
    assert_eq!(&a + &b, Labelling::parse(&g, &fs::read_to_string(&w).unwrap()).unwrap());
    assert!(member(&g, &a) && member(&g, &b));
}

#[test]
fn split_low_degree() {
    let dir = TempDir::new().unwrap();
    let g = caterpillar(3).unwrap();
    let hard = write(&dir, "hard.txt", "degree 4\nl 2\nv1 2\nh1 2\nv2 2\nv3 4\no1 1\no2 1\no3 2\n");
    let (code, out, _) = phylosem(&["split", "--g", "3", "--labelling", &hard]);
    assert_eq!((code, out.as_str()), (1, "indecomposable: certified\n"));

    let doubled = write(&dir, "doubled.txt", "degree 2\no1 2\no3 2\n");
    let (code, out, _) = phylosem(&["split", "--g", "3", "--labelling", &doubled]);
    assert_eq!(code, 0);
    let (a, b) = parts(&out, &g);
    assert_eq!((a.degree(), b.degree()), (1, 1));

    let outside = write(&dir, "outside.txt", "degree 1\nl 1\n");
    let (code, out, _) = phylosem(&["split", "--g", "3", "--labelling", &outside]);
    assert_eq!(code, 1);
    assert!(out.starts_with("member: no"));
}

#[test]
fn split_random_members() {
    let (code, out, _) = phylosem(&["split", "--g", "2", "--random", "20", "--degree", "4", "--seed", "5"]);
    assert_eq!((code, out.as_str()), (0, "split: 20/20 ok\n"));
    assert_eq!(phylosem(&["split", "--g", "2", "--random", "3"]).0, 2);
}

#[test]
fn decompose_lists_networks() {
    let dir = TempDir::new().unwrap();
    let w = write(&dir, "w.txt", "degree 2\nl 2\no1 1\n");
    let (code, out, _) = phylosem(&["decompose", "--g", "1", "--labelling", &w]);
    assert_eq!(code, 0);
    let networks = out.split("# networks\n").nth(1).unwrap().split("# matrix").next().unwrap();
    assert_eq!(networks.lines().count(), 2);
}

#[test]
fn table_counts_are_stable() {
    let first = phylosem(&["table", "--g", "2", "--format", "counts"]);
    assert_eq!(first, (0, "d\tcount\nall\t15\n1\t4\n2\t7\n3\t4\n".into(), String::new()));
    assert_eq!(phylosem(&["--jobs", "1", "table", "--g", "2", "--format", "counts"]), first);
}

#[test]
fn table_rows() {
    let (code, out, _) = phylosem(&["table", "--g", "3"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "4 | (2, 2, 2, 2, 4) |  9"), "{out}");
    assert_eq!(out.lines().count(), 2 + 17);
}

#[test]
fn generators_on_a_tree() {
    let dir = TempDir::new().unwrap();
    let tripod = write(&dir, "tripod.txt", TRIPOD);
    let (code, out, _) = phylosem(&["generators", &tripod, "--max-degree", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out, "# d (e1, e2, e3)\n1 (0, 0, 0)\n1 (0, 1, 1)\n1 (1, 0, 1)\n1 (1, 1, 0)\n");
    let (_, json, _) = phylosem(&["generators", &tripod, "--max-degree", "1", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);
}

#[test]
fn generator_cache_round_trip() {
    let dir = TempDir::new().unwrap();
    std::env::set_var("PHYLOSEM_CACHE_DIR", dir.path());
    let fresh = phylosem(&["generators", "--g", "2", "--format", "json"]);
    let cached = phylosem(&["generators", "--g", "2", "--format", "json"]);
    std::env::remove_var("PHYLOSEM_CACHE_DIR");
    assert_eq!(fresh, cached);
    assert_eq!(fs::read_dir(dir.path()).unwrap().count(), 1);
    let rows: serde_json::Value = serde_json::from_str(&fresh.1).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 5);
}

#[test]
fn canonical_element() {
    let (code, out, _) = phylosem(&["canonical", "--g", "2"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("# tuple (2, 2, 2)\ndegree 3\n"), "{out}");
    assert_eq!(phylosem(&["canonical", "--g", "0"]).0, 2);
}

#[test]
fn hilbert_matches_brute_count() {
    let g = caterpillar(2).unwrap();
    for d in 0..=4u32 {
        let brute = all_labellings(g.edge_count(), d).filter(|l| trivalent_member(&g, l, d)).count();
        let (code, out, _) = phylosem(&["hilbert", "--g", "2", "--degree", &d.to_string()]);
        assert_eq!((code, out), (0, format!("{brute}\n")));
    }
}
