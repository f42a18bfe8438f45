use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use wrlat_validation::*;
use wrlat_core::numtheory::enumerate_conductors;
use wrlat_core::{Field, Result};

fn corpus() -> Result<Vec<std::sync::Arc<Field>>> {
    quartic_fields(7, 65)
}

fn main() -> ExitCode {
    type Criterion = Box<dyn Fn() -> Result<Outcome>>;
    let criteria: Vec<(&str, Criterion)> = vec![
        ("cubic orthogonal ideal of norm m^2, m <= 200", Box::new(|| orthogonal_square_ideals(200))),
        ("cubic squarefree-norm WR criterion, m <= 500", Box::new(|| squarefree_norm_criterion(500))),
        ("cubic mixed-norm WR criterion, m = 819, 1197, 1953", Box::new(|| mixed_norm_criterion(&[819, 1197, 1953]))),
        ("quartic prime decomposition vs oracle, |a| <= 7, d <= 65, p <= 50", Box::new(|| decomposition_criterion(&corpus()?, 50))),
        ("quartic unique-prime WR criterion", Box::new(|| unique_prime_criterion(&corpus()?, 50))),
        ("(1,2,1,5) WR norms not dividing 2000, N <= 4000", Box::new(even_discriminant_norms)),
        ("prime above 2 WR only at (1,2,1,5), |a| <= 5, d <= 40", Box::new(|| prime2_criterion(5, 40))),
        ("shortest vectors vs brute force, dims 3 and 4", Box::new(|| Ok(enumerator_soundness(100, 0x5eed)))),
        ("determinants, ideal closure, trace sublattices", Box::new(|| structural_invariants(200, &corpus()?, 50))),
        ("odd discriminant WR norms divide the discriminant, N <= 2000", Box::new(|| {
            let mut fields = corpus()?;
            for m in enumerate_conductors(500) {
                fields.push(std::sync::Arc::new(Field::cubic(m)?));
            }
            conjecture_scan(&fields, 2000)
        })),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match panic::catch_unwind(AssertUnwindSafe(run)) {
            Ok(Ok(o)) => o,
            Ok(Err(e)) => Outcome { pass: false, detail: format!("error: {e}") },
            Err(_) => Outcome { pass: false, detail: "panicked".into() },
        };
        failed += usize::from(!outcome.pass);
        println!(
            "{} criterion {}: {} [{:.1}s]\n    {}",
            if outcome.pass { "PASS" } else { "FAIL" },
            k + 1,
            name,
            start.elapsed().as_secs_f64(),
            outcome.detail
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
