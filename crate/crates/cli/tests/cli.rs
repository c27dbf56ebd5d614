use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn data(name: &str) -> String {
    root().join("data").join(name).to_string_lossy().into_owned()
}

fn autfn(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_autfn")).args(args).env_remove("AUTFN_CAP").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

fn schema(name: &str) -> jsonschema::Validator {
    let text = std::fs::read_to_string(root().join("schemas").join(name)).unwrap();
    jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
}

fn assert_valid(v: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = v.iter_errors(doc).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}");
}

#[test]
fn relations_report_is_schema_valid_and_round_trips() {
    let o = autfn(&["relations", "--n", "4", "--m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_valid(&schema("report.schema.json"), &doc);
    assert_eq!(doc["summary"]["failed"], 0);
    assert_eq!(doc["command"], "relations --n 4 --m 2");
    let text = stdout(&o);
    let reparsed: Value = serde_json::from_str(&serde_json::to_string_pretty(&doc).unwrap()).unwrap();
    assert_eq!(reparsed, doc);
    assert!(text.ends_with("}\n"));
}

#[test]
fn text_and_json_list_the_same_checks() {
    let j = json(&autfn(&["relations", "--n", "4", "--m", "2", "--check", "nielsen.*"]));
    let mut from_json: Vec<String> =
        j["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap().to_string()).collect();
    let t = stdout(&autfn(&["--format", "text", "relations", "--n", "4", "--m", "2", "--check", "nielsen.*"]));
    let mut from_text: Vec<String> = t
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL") || l.starts_with("SKIP"))
        .map(|l| l.split_whitespace().nth(1).unwrap().to_string())
        .collect();
    assert!(!from_json.is_empty());
    from_json.sort();
    from_text.sort();
    assert_eq!(from_json, from_text);
    assert!(t.contains(&format!("summary: {} passed, 0 failed", from_json.len())));
}

#[test]
fn check_filter_selects_by_glob() {
    let doc = json(&autfn(&["relations", "--check", "tgroup.t_*.m2.*"]));
    let ids: Vec<&str> = doc["results"].as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(
        ids,
        ["tgroup.t_product.m2.i1.j2", "tgroup.t_mixed.m2.i1.j2", "tgroup.t_product.m2.i2.j1", "tgroup.t_mixed.m2.i2.j1"]
    );
    assert_eq!(doc["command"], "relations --n 5 --m 3 --check tgroup.t_*.m2.*");
}

#[test]
fn usage_and_input_errors_exit_two() {
    assert_eq!(autfn(&["relations", "--bogus"]).status.code(), Some(2));
    assert_eq!(autfn(&["relations", "--check", "no.such.check"]).status.code(), Some(2));
    assert_eq!(autfn(&["relations", "--n", "1"]).status.code(), Some(2));
    assert_eq!(autfn(&["oracle", "--group", "sp", "--n", "4", "--space", "sphere", "--dim", "1", "--p", "2"]).status.code(), Some(2));
    assert_eq!(autfn(&["homology", "--input", "/nonexistent.json", "--p", "2"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"maximal_simplices\": [[0, 1],").unwrap();
    let o = autfn(&["homology", "--input", bad.to_str().unwrap(), "--p", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("malformed JSON"));
    // a map that is not simplicial is an input error, not a Smith failure
    let action = dir.path().join("action.json");
    std::fs::write(&action, r#"{"vertex_maps":[{"name":"bad","map":[2,1,0,3,4,5]}]}"#).unwrap();
    let o = autfn(&["smith", "--input", &data("octahedron.json"), "--action", action.to_str().unwrap(), "--p", "2", "--check", "fixed"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn cap_overflow_is_an_input_error() {
    let o = autfn(&["subgroup", "--rank", "2", "--cap", "100", "L12"]);
    assert_eq!(o.status.code(), Some(2));
    let run = |cap: &str| {
        Command::new(env!("CARGO_BIN_EXE_autfn"))
            .args(["subgroup", "--rank", "3", "EPS12", "EPS23"])
            .env("AUTFN_CAP", cap)
            .output()
            .unwrap()
    };
    assert_eq!(run("3").status.code(), Some(2));
    assert_eq!(run("4").status.code(), Some(0));
    assert_eq!(run("many").status.code(), Some(2));
}

#[test]
fn homology_output() {
    let o = autfn(&["homology", "--input", &data("octahedron.json"), "--p", "2"]);
    assert_eq!(stdout(&o), "{\"p\":2,\"betti\":[1,0,1]}\n");
    let cone = json(&autfn(&["homology", "--input", &data("cone_octahedron.json"), "--p", "3"]));
    assert_eq!(cone["betti"], serde_json::json!([1, 0, 0, 0]));
    let square = json(&autfn(&["homology", "--input", &data("square.json"), "--p", "2"]));
    assert_eq!(square["betti"], serde_json::json!([1, 1]));
}

#[test]
fn oracle_output() {
    let o = json(&autfn(&["oracle", "--group", "saut", "--n", "5", "--space", "sphere", "--dim", "3", "--p", "2"]));
    assert_eq!(o["verdict"], "trivial_forced");
    assert_eq!(o["theorem"], "sphere_Z2");
    let o = json(&autfn(&["oracle", "--group", "saut", "--n", "3", "--space", "sphere", "--dim", "1", "--p", "2"]));
    assert_eq!(o["verdict"], "trivial_forced");
    let o = json(&autfn(&["oracle", "--group", "saut", "--n", "5", "--space", "sphere", "--dim", "4", "--p", "2"]));
    assert_eq!(o["verdict"], "not_ruled_out");
    let o = json(&autfn(&["oracle", "--group", "saut", "--n", "6", "--space", "acyclic", "--dim", "5", "--p", "3"]));
    assert_eq!(o["theorem"], "acyclic_Z3");
    let o = json(&autfn(&["oracle", "--group", "gl", "--n", "4", "--space", "acyclic", "--dim", "2", "--p", "2"]));
    assert_eq!(o["verdict"], "determinant_only");
}

#[test]
fn smith_subcommand_on_fixtures() {
    let oct = data("octahedron.json");
    let run = |action: &str, p: &str, check: &str| {
        let o = autfn(&["smith", "--input", &oct, "--action", &data(action), "--p", p, "--check", check]);
        assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
        json(&o)
    };
    let catalog = run("octahedron_catalog.json", "2", "fixed");
    let observed: Vec<&str> =
        catalog["verdicts"].as_array().unwrap().iter().map(|v| v["observed"].as_str().unwrap()).collect();
    assert_eq!(observed, ["S^1", "S^1", "S^1", "S^0", "empty"]);
    let rot = run("octahedron_rotation.json", "3", "fixed");
    assert_eq!(rot["verdicts"][0]["observed"], "S^0");
    assert!(rot["verdicts"][0]["subdivisions"].as_u64().unwrap() <= 2);
    assert_eq!(run("octahedron_klein.json", "2", "borel")["pass"], true);
    assert_eq!(run("octahedron_symmetries.json", "2", "pairs")["pass"], true);
    assert_eq!(run("octahedron_symmetries.json", "2", "free")["verdicts"][0]["checked"], 25);
    let one = autfn(&["smith", "--input", &oct, "--action", &data("octahedron_catalog.json"), "--p", "2", "--check", "fixed", "--map", "antipodal"]);
    assert_eq!(json(&one)["verdicts"].as_array().unwrap().len(), 1);
}

#[test]
fn graph_aut_reports_t_membership() {
    let g = data("t2_graph.json");
    let o = autfn(&["graph-aut", "--graph", &g, "--symmetry", "rot1"]);
    assert_eq!(o.status.code(), Some(0));
    let doc = json(&o);
    assert_eq!(doc["order"], 3);
    assert_eq!(doc["in_t"], true);
    assert_eq!(doc["images"][0], "a1 -> a1^-1 b1");
    // swapping the two loops at v_1 is a graph symmetry outside T
    let o = autfn(&["graph-aut", "--graph", &g, "--symmetry", "swap1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["in_t"], false);
    assert_eq!(autfn(&["graph-aut", "--graph", &g, "--symmetry", "nope"]).status.code(), Some(2));
}

#[test]
fn subgroup_and_matrix_group() {
    let t = json(&autfn(&["subgroup", "--rank", "6", "R1", "R2", "R3"]));
    assert_eq!(t["order"], 27);
    assert_eq!(t["structure"], "(Z_3)^3");
    let sw = json(&autfn(&["subgroup", "--rank", "3", "EPS12", "EPS23", "PERM(1 2) E1", "PERM(2 3) E1"]));
    assert_eq!(sw["order"], 24);
    assert_eq!(sw["structure"], "nonabelian");
    let sl = json(&autfn(&["matrix-group", "--n", "3", "--p", "2", "--sl", "--simple"]));
    assert_eq!((sl["order"].as_u64(), sl["simple"].as_bool()), (Some(168), Some(true)));
    let from_words = json(&autfn(&["matrix-group", "--n", "3", "--p", "2", "--gen", "L12", "--gen", "L23", "--gen", "L31"]));
    assert_eq!(from_words["order"], 168);
    let cols = json(&autfn(&["matrix-group", "--n", "4", "--p", "2", "--matrix", "1 0 0 0;1 1 0 0;0 0 1 0;0 0 0 1", "--matrix", "1 0 0 0;0 1 0 0;1 0 1 0;0 0 0 1", "--matrix", "1 0 0 0;0 1 0 0;0 0 1 0;1 0 0 1"]));
    assert_eq!(cols["elementary_abelian_rank"], 3);
    let nc = json(&autfn(&["matrix-group", "--n", "3", "--p", "2", "--sl", "--normal-closure", "L12"]));
    assert_eq!((nc["normal_closure"]["order"].as_u64(), nc["normal_closure"]["normal"].as_bool()), (Some(168), Some(true)));
}

#[test]
fn fixtures_match_schemas() {
    let complex = schema("complex.schema.json");
    let action = schema("action.schema.json");
    let graph = schema("graph.schema.json");
    for entry in std::fs::read_dir(root().join("data")).unwrap() {
        let path = entry.unwrap().path();
        let doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let v = if doc.get("vertex_maps").is_some() {
            &action
        } else if doc.get("edges").is_some() {
            &graph
        } else {
            &complex
        };
        assert_valid(v, &doc);
    }
}
