use std::process::{Command, Output};

use homvec::arith::rational;
use homvec::graph::{
    gen_chrom_pair, gen_frac_pair, gen_lollipop, gen_standard, write_graph6, write_weighted_json, StandardKind,
};

fn homvec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homvec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn g6(kind: StandardKind, n: usize) -> String {
    write_graph6(&gen_standard(kind, n).unwrap())
}

fn tmp(name: &str, text: &str) -> String {
    let path = std::env::temp_dir().join(format!("homvec-cli-{}-{name}", std::process::id()));
    std::fs::write(&path, text).unwrap();
    format!("@{}", path.display())
}

#[test]
fn count_modes() {
    let c5 = g6(StandardKind::Cycle, 5);
    let k3 = g6(StandardKind::Clique, 3);
    // an odd cycle onto K3 must use all three edges
    let cases = [("hom", "30"), ("inj", "0"), ("sur", "30"), ("exists", "true")];
    for (mode, want) in cases {
        let o = homvec(&["count", "--mode", mode, "--left", &c5, "--right", &k3]);
        assert_eq!((o.status.code(), stdout(&o).trim()), (Some(0), want), "{mode}");
    }
    let o = homvec(&["count", "--mode", "aut", "--left", &c5]);
    assert_eq!(stdout(&o), "10\n");
    let o = homvec(&["count", "--mode", "exists", "--left", &c5, "--right", &g6(StandardKind::Clique, 2)]);
    assert_eq!(stdout(&o), "false\n");

    let (k2, k3) = (g6(StandardKind::Clique, 2), g6(StandardKind::Clique, 3));
    assert_eq!(stdout(&homvec(&["count", "--mode", "hom", "--left", &k2, "--right", &k3])), "6\n");
    assert_eq!(stdout(&homvec(&["count", "--mode", "aut", "--left", &g6(StandardKind::Cycle, 4)])), "8\n");
    let c6 = g6(StandardKind::Cycle, 6);
    assert_eq!(stdout(&homvec(&["count", "--mode", "hom", "--left", &k3, "--right", &c6])), "0\n");
}

#[test]
fn output_is_deterministic() {
    let (g, h) = gen_frac_pair(4).unwrap();
    let args = ["test", "--relation", "wl:2", &write_graph6(&g), &write_graph6(&h)];
    assert_eq!(homvec(&args).stdout, homvec(&args).stdout);
    let args = ["vector", "--side", "left", "--class", "tw<=2", "--bound", "5", "Dhc"];
    assert_eq!(homvec(&args).stdout, homvec(&args).stdout);
}

#[test]
fn graph_and_weighted_files() {
    let c4 = tmp("c4.g6", &format!("\n{}\n", g6(StandardKind::Cycle, 4)));
    let o = homvec(&["count", "--left", &c4, "--right", &g6(StandardKind::Clique, 2)]);
    assert_eq!(stdout(&o), "2\n");
    let l = tmp("lollipop.json", &write_weighted_json(&gen_lollipop(&rational(1, 2), &rational(3, 1))));
    let k2 = g6(StandardKind::Clique, 2);
    let o = homvec(&["count", "--left", &k2, "--weighted", &l]);
    assert_eq!(stdout(&o), "12\n");
    let o = homvec(&["count", "--left", &k2, "--weighted", &l, "--semiring", "naturals"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn vectors_as_csv() {
    let p3 = g6(StandardKind::Path, 3);
    let o = homvec(&["vector", "--side", "left", "--class", "cycles", "--bound", "3", &p3]);
    assert_eq!(stdout(&o), "member_graph6,count\n@,3\nA_,4\nBw,0\n");
    let o = homvec(&["vector", "--side", "right", "--class", "cliques", "--bound", "3", &p3]);
    assert_eq!(stdout(&o), "member_graph6,count\n@,0\nA_,2\nBw,12\n");
}

#[test]
fn equivalence_verdicts() {
    let (g, h) = gen_frac_pair(3).unwrap();
    let (g, h) = (write_graph6(&g), write_graph6(&h));
    let o = homvec(&["test", "--relation", "fraciso", &g, &h]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "equivalent\n".to_string()));
    let o = homvec(&["test", "--relation", "wl:2", &g, &h]);
    assert_eq!(o.status.code(), Some(1));
    let o = homvec(&["test", "--relation", "iso", &g, &h]);
    let text = stdout(&o);
    assert!(text.starts_with("distinguished\ndistinguisher left "), "{text}");

    let (x1, x2) = gen_chrom_pair();
    let o = homvec(&["test", "--relation", "chromeq", "--csv", &write_graph6(&x1), &write_graph6(&x2)]);
    let want =
        format!("g6_left,g6_right,relation,verdict\n{},{},chromeq,equivalent\n", write_graph6(&x1), write_graph6(&x2));
    assert_eq!(stdout(&o), want);

    // closed 2-walks already differ: 2·|E|
    let o = homvec(&["test", "--relation", "cospectral", &g6(StandardKind::Clique, 3), &g6(StandardKind::Path, 3)]);
    assert_eq!(stdout(&o), "distinguished\ndistinguisher left A_ 6 4\n");
}

#[test]
fn polynomials_and_parameters() {
    let c8 = g6(StandardKind::Cycle, 8);
    let o = homvec(&["poly", "--which", "chromatic", &c8]);
    assert_eq!(stdout(&o), "-7*x + 28*x^2 - 56*x^3 + 70*x^4 - 56*x^5 + 28*x^6 - 8*x^7 + x^8\n");
    let k2 = g6(StandardKind::Clique, 2);
    assert_eq!(stdout(&homvec(&["poly", "--which", "cep", &k2])), "x*y + x^2\n");
    assert_eq!(stdout(&homvec(&["poly", "--which", "independence", &k2])), "y^2 + 2*x*y\n");
    let c5 = g6(StandardKind::Cycle, 5);
    let rows: Vec<String> =
        ["chi", "omega", "chif", "omegaf"].iter().map(|w| stdout(&homvec(&["param", "--which", w, &c5]))).collect();
    assert_eq!(rows, ["3\n", "2\n", "5/2\n", "5/2\n"]);
    let o = homvec(&["param", "--which", "all", &c5]);
    assert_eq!(stdout(&o), format!("g6,chi,omega,chi_f\n{c5},3,2,5/2\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(homvec(&["count", "--left", "!!", "--right", "A_"]).status.code(), Some(2));
    assert_eq!(homvec(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(homvec(&["test", "--relation", "tinhofer", "A_", "A_"]).status.code(), Some(2));
    assert_eq!(homvec(&["--help"]).status.code(), Some(0));

    let p13 = g6(StandardKind::Path, 13);
    let o = homvec(&["poly", "--which", "chromatic", &p13]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("guard `"));

    let c5 = g6(StandardKind::Cycle, 5);
    let scaled = |scale: &str| {
        Command::new(env!("CARGO_BIN_EXE_homvec"))
            .env("HOMVEC_GUARD_SCALE", scale)
            .args(["poly", "--which", "chromatic", &c5])
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(scaled("1/100"), Some(3));
    assert_eq!(scaled("2"), Some(0));
    assert_eq!(scaled("-1"), Some(2));
    assert_eq!(scaled("x"), Some(2));
}

#[test]
fn suites_report() {
    let o = homvec(&["suite", "--name", "chromatic"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS"));
    assert_eq!(homvec(&["suite", "--name", "nope"]).status.code(), Some(2));
    assert_eq!(homvec(&["suite"]).status.code(), Some(2));
}
