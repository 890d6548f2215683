use frobtower_core::engine::Engine;
use frobtower_core::towers::Tower;
use frobtower_core::verify;
use std::time::Instant;

#[test]
fn probe_symmetric_moments() {
    let t0 = Instant::now();
    let mut e = Engine::new(Tower::symmetric(), 5, 1000).unwrap();
    let mut count = 0;
    for n in 1..=4usize {
        let blocks = e.blocks(n).unwrap().blocks.len();
        for mu in 0..blocks {
            for k in 0..=4u32 {
                let reps = verify::check_moment_identities(&mut e, n, mu, k).unwrap();
                assert!(reps.iter().all(|r| r.status == verify::Status::Verified),
                    "moment failure at n={n} mu={mu} k={k}: {:?}", reps.iter().map(|r|&r.witness).collect::<Vec<_>>());
                count += reps.len();
            }
        }
    }
    println!("symmetric moments n<=4 k<=4: {count} identities in {:?}", t0.elapsed());

    // hecke d=2 both weight choices, n <= 2
    for spec in ["hecke:2,0,0", "hecke:2,0,1"] {
        let t1 = Instant::now();
        let mut e = Engine::new(Tower::from_spec(spec).unwrap(), 3, 1000).unwrap();
        let mut count = 0;
        for n in 1..=2usize {
            let blocks = e.blocks(n).unwrap().blocks.len();
            for mu in 0..blocks {
                for k in 0..=4u32 {
                    let reps = verify::check_moment_identities(&mut e, n, mu, k).unwrap();
                    assert!(reps.iter().all(|r| r.status == verify::Status::Verified),
                        "{spec} moment failure at n={n} mu={mu} k={k}: {:?}", reps.iter().map(|r|&r.witness).collect::<Vec<_>>());
                    count += reps.len();
                }
            }
        }
        println!("{spec} moments n<=2 k<=4: {count} identities in {:?}", t1.elapsed());
    }
}
