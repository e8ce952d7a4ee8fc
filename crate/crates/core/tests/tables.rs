use phylosem::generators::{canonical_indecomposable, generator_table, tuple_text, GeneratorRecord};
use phylosem::graph::caterpillar;

fn fixture_block(g: usize) -> Vec<&'static str> {
    let header = format!("g={g}");
    include_str!("data/caterpillar_generators.txt")
        .lines()
        .skip_while(|l| *l != header)
        .skip(1)
        .take_while(|l| !l.starts_with("g="))
        .collect()
}

#[test]
fn genus_four_rows() {
    let rows: Vec<String> = generator_table(4).unwrap().iter().map(GeneratorRecord::row_text).collect();
    assert_eq!(rows, fixture_block(4));
}

#[test]
fn multiplicity_is_the_loop_range_product() {
    for g in 1..=4 {
        for r in generator_table(g).unwrap() {
            assert_eq!(r.loop_multiplicity, r.range_product(), "g = {g}: {}", r.row_text());
        }
    }
}

#[test]
fn canonical_elements_top_their_tables() {
    for g in [2, 4] {
        let graph = caterpillar(g).unwrap();
        let w = canonical_indecomposable(g).unwrap();
        let row = format!("{} {}", w.degree(), tuple_text(&w.non_loop_tuple(&graph)));
        assert!(fixture_block(g).iter().any(|l| l.starts_with(&row)), "{row}");
        let top = generator_table(g).unwrap().iter().map(|r| r.degree).max().unwrap();
        assert_eq!(top, w.degree());
    }
}
