use std::path::Path;
use std::process::{Command, Output};

use abcolor::io::{parse_certificate, parse_gadget, parse_graph, write_graph};
use abcolor::generators::{forced_copies_with_apex, gen_friendship};
use abcolor::Graph;
use tempfile::TempDir;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_abcolor")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn status_line(o: &Output) -> String {
    stdout(o).lines().find(|l| l.starts_with("s ")).unwrap_or_default().to_string()
}

fn write(dir: &Path, name: &str, text: &str) {
    std::fs::write(dir.join(name), text).unwrap();
}

#[test]
fn solve_fig8_k1_is_not_colourable() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["generate", "--family", "fig8", "--k", "1", "-o", "fig8_k1.g"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(dir.path(), &["solve", "-a", "2", "-b", "1", "fig8_k1.g"]);
    assert_eq!(status_line(&o), "s NOT_COLORABLE");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_star_certificate() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "star.g", &write_graph(&Graph::star(4), &[]));
    write(dir.path(), "star.cert", "s COLORING a=1 b=1\nv 1 d2 0\nv 2 d1 0\nv 3 d1 0\nv 4 d1 0\nv 5 d1 0\n");
    let o = run(dir.path(), &["verify", "-a", "1", "-b", "1", "star.g", "star.cert"]);
    assert_eq!(status_line(&o), "s VALID");
    assert_eq!(o.status.code(), Some(0));
    write(dir.path(), "bad.cert", "s COLORING a=1 b=1\nv 1 d1 0\nv 2 d1 0\nv 3 d1 0\nv 4 d1 0\nv 5 d1 0\n");
    let o = run(dir.path(), &["verify", "star.g", "bad.cert"]);
    assert_eq!(status_line(&o), "s INVALID");
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("c violation d1-edge"));
}

#[test]
fn generate_fig6_has_order_eight() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["generate", "--family", "fig6", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&stdout(&o)).unwrap();
    assert_eq!(g.n(), 8);
}

#[test]
fn emitted_graphs_round_trip() {
    let dir = TempDir::new().unwrap();
    for args in [
        &["generate", "--family", "fig5", "--k", "1", "--l", "2"][..],
        &["generate", "--family", "random-tf-planar", "--n", "40", "--seed", "5"],
        &["generate", "--family", "grid", "--w", "3", "--h", "4"],
    ] {
        let text = stdout(&run(dir.path(), args));
        let g = parse_graph(&text).unwrap();
        let comments: Vec<String> =
            text.lines().filter_map(|l| l.strip_prefix("c ")).map(str::to_string).collect();
        let canonical = write_graph(&g, &comments);
        assert_eq!(canonical, text, "{args:?}");
        assert_eq!(parse_graph(&canonical).unwrap(), g);
    }
}

#[test]
fn solve_certificate_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    run(dir.path(), &["generate", "--family", "cycle", "--n", "6", "-o", "c6.g"]);
    let o = run(dir.path(), &["solve", "-a", "0", "-b", "3", "c6.g", "--cert", "c6.cert"]);
    assert_eq!(status_line(&o), "s COLORABLE");
    let text = std::fs::read_to_string(dir.path().join("c6.cert")).unwrap();
    let (p, c) = parse_certificate(&text).unwrap();
    assert_eq!(abcolor::io::write_certificate(p, &c), text);
    let o = run(dir.path(), &["verify", "c6.g", "c6.cert"]);
    assert_eq!(status_line(&o), "s VALID");
}

#[test]
fn same_seed_same_output() {
    let dir = TempDir::new().unwrap();
    let args = ["generate", "--family", "random-degenerate", "--n", "50", "--k", "2", "--seed", "9"];
    let (a, b) = (run(dir.path(), &args), run(dir.path(), &args));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("c seed 9"));
    let other = run(dir.path(), &["generate", "--family", "random-degenerate", "--n", "50", "--k", "2", "--seed", "10"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn input_errors_exit_three() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "broken.g", "p 2 1\ne 1 9\n");
    for args in [
        &["solve", "-a", "1", "-b", "1", "missing.g"][..],
        &["solve", "-a", "1", "-b", "1", "broken.g"],
        &["solve", "--frobnicate"],
        &["generate", "--family", "fig9"],
        &["generate", "--family", "fig6"],
        &["--budget", "0", "solve", "-a", "1", "-b", "1", "broken.g"],
    ] {
        let o = run(dir.path(), args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn unknown_on_tiny_budget() {
    let dir = TempDir::new().unwrap();
    run(dir.path(), &["generate", "--family", "fig6", "--k", "3", "-o", "f6.g"]);
    let o = run(dir.path(), &["--budget", "1", "solve", "-a", "1", "-b", "3", "f6.g"]);
    assert_eq!(status_line(&o), "s UNKNOWN");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn color_reports_bound() {
    let dir = TempDir::new().unwrap();
    run(dir.path(), &["generate", "--family", "grid", "--w", "6", "--h", "6", "-o", "grid.g"]);
    let o = run(dir.path(), &["color", "--algo", "planar-g4", "grid.g"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let bound = out.lines().find(|l| l.starts_with("c BOUND ")).unwrap();
    assert!(bound.contains("n=36") && bound.contains("claim=sqrt(640*n)") && bound.ends_with("holds=true"));
    let (p, c) = parse_certificate(&out).unwrap();
    assert!(abcolor::verify(&parse_graph(&std::fs::read_to_string(dir.path().join("grid.g")).unwrap()).unwrap(), p, &c)
        .unwrap()
        .is_empty());
}

#[test]
fn reduce_with_sidecar() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "k2.g", &write_graph(&Graph::path(2), &[]));
    let o = run(dir.path(), &["reduce", "--from", "3col", "--to", "1,3", "--g", "3", "k2.g", "-o", "out.g", "--sidecar", "out.map"]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&std::fs::read_to_string(dir.path().join("out.g")).unwrap()).unwrap();
    assert!(g.is_bipartite() && g.max_degree() == 4 && g.girth().is_none_or(|x| x >= 60));
    let map = std::fs::read_to_string(dir.path().join("out.map")).unwrap();
    assert_eq!(map.lines().filter(|l| l.starts_with("c map ")).count(), g.n());
    assert!(map.contains("c map 1 path 0 0"));
}

#[test]
fn reduce_sat_and_inline_provenance() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "f.cnf", "c three clauses\np cnf 3 3\n1 2 3 0\n1 2 -3 0\n-1 -2 3 0\n");
    let o = run(dir.path(), &["reduce", "--from", "sat", "--to", "2,1", "f.cnf"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let g = parse_graph(&text).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("c map ")).count(), g.n());
    let o = run(dir.path(), &["reduce", "--from", "sat", "--to", "2,k", "--k", "3", "f.cnf"]);
    assert_eq!(o.status.code(), Some(3));
    let o = run(dir.path(), &["reduce", "--from", "dd", "--to", "1,3", "f.cnf"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn gadgets_from_files() {
    let dir = TempDir::new().unwrap();
    let o = run(dir.path(), &["generate", "--family", "friendship", "--k", "2", "-o", "fr.g"]);
    assert_eq!(o.status.code(), Some(0));
    let spec = parse_gadget(&std::fs::read_to_string(dir.path().join("fr.g")).unwrap()).unwrap();
    assert_eq!(spec.gadget.n(), 7);
    assert_eq!(status_line(&run(dir.path(), &["gadget-check", "-a", "2", "-b", "2", "fr.g"])), "s HOLDS");
    // At (2,3) the apex can take a distance-1 colour.
    let o = run(dir.path(), &["gadget-check", "-a", "2", "-b", "3", "fr.g"]);
    assert_eq!(status_line(&o), "s FAILS");
    assert_eq!(o.status.code(), Some(1));
    run(dir.path(), &["generate", "--family", "gadget", "--name", "h1", "--k", "1", "-o", "h1.g"]);
    write(dir.path(), "k3.g", &write_graph(&Graph::complete(3), &[]));
    let o = run(dir.path(), &["reduce", "--from", "3col", "--to", "3,k", "--k", "1", "--gadget", "h1=h1.g", "k3.g"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(dir.path(), &["reduce", "--from", "3col", "--to", "3,k", "--k", "1", "--gadget", "var=h1.g", "k3.g"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn profile_obstructions() {
    let dir = TempDir::new().unwrap();
    // Two friendship gadgets whose centres share an apex: not (2,1)-colourable.
    let g = forced_copies_with_apex(&gen_friendship(1).unwrap(), 1);
    let apex = (g.n()).to_string();
    write(dir.path(), "apex.g", &write_graph(&g, &[]));
    let o = run(dir.path(), &["profile-obstructions", "--vertex", &apex, "--k", "1", "apex.g", "--forced", "forced.g"]);
    assert_eq!(status_line(&o), "s OBSTRUCTED");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(status_line(&run(dir.path(), &["gadget-check", "-a", "2", "-b", "1", "forced.g"])), "s HOLDS");
    // K4 with one edge subdivided is (2,1)-colourable.
    let sk4 = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 3)]);
    write(dir.path(), "sk4.g", &write_graph(&sk4, &[]));
    let o = run(dir.path(), &["profile-obstructions", "--vertex", "5", "--k", "1", "sk4.g"]);
    assert_eq!(status_line(&o), "s EXTENDABLE");
    assert_eq!(o.status.code(), Some(1));
    let o = run(dir.path(), &["profile-obstructions", "--vertex", "1", "--k", "1", "sk4.g"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn json_report() {
    let dir = TempDir::new().unwrap();
    write(dir.path(), "p3.g", &write_graph(&Graph::path(3), &[]));
    let o = run(dir.path(), &["--format", "json", "solve", "-a", "1", "-b", "1", "p3.g"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "COLORABLE");
    assert_eq!(v["exit_code"], 0);
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert!(v["counters"]["nodes"].is_u64());
}

#[test]
fn gadget_corpus_holds() {
    let corpus = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../gadgets");
    let mut checked = 0;
    for entry in std::fs::read_dir(&corpus).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let params = text.lines().next().and_then(|l| l.strip_prefix("c check ")).expect("check line");
        let (a, b) = params.split_once(' ').unwrap();
        let (a, b) = (a.trim_start_matches("a="), b.trim_start_matches("b="));
        parse_gadget(&text).unwrap();
        let o = run(&corpus, &["gadget-check", "-a", a, "-b", b, path.to_str().unwrap()]);
        assert_eq!(status_line(&o), "s HOLDS", "{}", path.display());
        assert!(stdout(&o).contains("c colorable COLORABLE"), "{}", path.display());
        checked += 1;
    }
    assert!(checked >= 8);
}
