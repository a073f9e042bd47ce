use omdci::gen::{gen_graph, gen_x3c, GraphKind};
use omdci::oracle::{hamiltonian_oracle, x3c_oracle};
use omdci::reduce::{
    check_cohc_structure, extract_cover, extract_cycle, reduce_cohc, reduce_x3c, witness_from_cycle,
};
use omdci::{
    find_positive_solution, solve_plus_fpt, verify_omdci, verify_plus, Graph, SolveBudget,
};

fn all_graphs_on_3() -> Vec<Graph> {
    let pairs = [(1, 2), (1, 3), (2, 3)];
    (0..8u8)
        .map(|mask| Graph::new(3, (0..3).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b])).unwrap())
        .collect()
}

#[test]
fn cohc_equivalence_on_three_vertices() {
    for g in all_graphs_on_3() {
        let (inst, map) = reduce_cohc(&g).unwrap();
        let out = find_positive_solution(&inst, SolveBudget::unlimited()).unwrap();
        assert!(out.exhausted);
        assert_eq!(
            out.best.is_some(),
            hamiltonian_oracle(&g).is_some(),
            "{g:?}"
        );
        if let Some(sol) = out.best {
            assert!(verify_omdci(&inst, &sol).ok());
            assert_eq!(check_cohc_structure(&map, &sol), Ok(()));
            let c = extract_cycle(&g, &map, &sol).unwrap();
            assert_eq!(c.len(), 3);
        }
    }
}

#[test]
fn cohc_witnesses_on_planted_graphs() {
    for seed in 0..10 {
        let g = gen_graph(GraphKind::PlantedHc {
            n: 6,
            extra_p: 0.3,
            seed,
        })
        .unwrap();
        let cycle = hamiltonian_oracle(&g).unwrap();
        let (inst, map) = reduce_cohc(&g).unwrap();
        assert_eq!(inst.m().len(), 108);
        assert_eq!(inst.a().len(), 72 + 12 * g.edge_count());
        let w = witness_from_cycle(&g, &map, &cycle).unwrap();
        assert!(verify_omdci(&inst, &w).ok());
        assert_eq!(extract_cycle(&g, &map, &w).unwrap(), cycle);
    }
}

#[test]
fn x3c_equivalence_on_generated_instances() {
    for seed in 0..60 {
        for (q, m, planted) in [
            (1, 1, true),
            (1, 1, false),
            (2, 2, false),
            (2, 4, true),
            (2, 3, true),
            (2, 4, false),
        ] {
            let x = gen_x3c(seed, q, m, planted).unwrap();
            let (inst, map) = reduce_x3c(&x);
            let out = solve_plus_fpt(&inst).unwrap();
            assert!(out.exhausted);
            assert_eq!(out.best.is_some(), x3c_oracle(&x).is_some(), "{x:?}");
            if let Some(sol) = out.best {
                assert!(verify_plus(&inst, &sol).ok());
                let cover = extract_cover(&x, &map, &sol).unwrap();
                assert_eq!(cover.len(), q);
            }
        }
    }
}
