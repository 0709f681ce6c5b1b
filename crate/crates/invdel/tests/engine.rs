use invdel::engine::Calculator;
use invdel::{Config, Engine};
use invdel_core::align::PairMode;
use invdel_core::distance::{distance_matrix, mrca_distance};
use invdel_core::evolve::{random_genome, simulate, BranchEvents};
use invdel_core::genome::Genome;

fn calculator(engine: Engine, dir: &std::path::Path) -> Calculator {
    Calculator::new(&Config {
        cache_dir: Some(dir.to_path_buf()),
        engine,
        ..Config::default()
    })
}

fn sample(count: usize) -> Vec<Genome> {
    (0..count as u64)
        .map(|seed| {
            let a = random_genome(6, 100 + seed).unwrap();
            let b = BranchEvents {
                deletions: (seed % 3) as usize,
                inversions: (seed % 4) as usize,
            };
            simulate(&a, b, BranchEvents::default(), seed).unwrap().g1
        })
        .collect()
}

#[test]
fn cayley_engine_matches_direct_search() {
    let dir = tempfile::tempdir().unwrap();
    let cayley = calculator(Engine::Cayley, dir.path());
    let genomes = sample(8);
    for (i, a) in genomes.iter().enumerate() {
        for b in &genomes[i..] {
            let want = mrca_distance(a, b).unwrap().total;
            assert_eq!(cayley.distance(a, b).unwrap().total, want);
        }
    }
    assert!(!cayley.cache.take_notes().is_empty());
    // A second calculator reads the files written by the first.
    let again = calculator(Engine::Cayley, dir.path());
    again.distance(&genomes[1], &genomes[2]).unwrap();
    assert!(again.cache.take_notes().is_empty());
}

#[test]
fn parallel_matrix_matches_sequential() {
    let dir = tempfile::tempdir().unwrap();
    let genomes = sample(7);
    let want = distance_matrix(&genomes, PairMode::All).unwrap();
    let calc = calculator(Engine::OnTheFly, dir.path());
    for _ in 0..3 {
        assert_eq!(calc.matrix(&genomes).unwrap(), want);
    }
    for (i, row) in want.iter().enumerate() {
        assert_eq!(row[i], 0);
        for (j, v) in row.iter().enumerate() {
            assert_eq!(*v, want[j][i]);
        }
    }
}
