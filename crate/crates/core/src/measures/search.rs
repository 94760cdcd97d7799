/// Result of a [`pattern_search`] run.
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub x: Vec<f64>,
    pub value: f64,
    /// Exploratory sweeps performed.
    pub iterations: usize,
    /// Step fell below the tolerance (or the floor was reached) before the
    /// iteration budget ran out.
    pub converged: bool,
}

/// Hooke–Jeeves pattern search.
///
/// Each iteration polls every coordinate at `±step`, keeping any
/// improvement. A successful poll is followed by pattern moves along the
/// net displacement for as long as they keep paying off; a failed poll
/// halves the step. Decreases smaller than `objective_tolerance` count as
/// failures. The search stops when the step drops below `step_tolerance`,
/// when the objective reaches `floor`, or after `max_iters` polls.
pub fn pattern_search<F>(
    mut f: F,
    x0: Vec<f64>,
    initial_step: f64,
    max_iters: usize,
    step_tolerance: f64,
    objective_tolerance: f64,
    floor: f64,
) -> SearchOutcome
where
    F: FnMut(&[f64]) -> f64,
{
    let mut base = x0;
    let mut f_base = f(&base);
    let mut step = initial_step;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iters {
        if f_base <= floor {
            converged = true;
            break;
        }
        iterations += 1;
        let mut trial = base.clone();
        let mut f_trial = explore(&mut f, &mut trial, f_base, step);
        if f_trial < f_base - objective_tolerance {
            loop {
                let pattern: Vec<f64> = trial.iter().zip(&base).map(|(t, b)| 2.0 * t - b).collect();
                base = std::mem::replace(&mut trial, pattern);
                f_base = f_trial;
                if iterations >= max_iters || f_base <= floor {
                    break;
                }
                iterations += 1;
                let f_pattern = f(&trial);
                f_trial = explore(&mut f, &mut trial, f_pattern, step);
                if !(f_trial < f_base - objective_tolerance) {
                    break;
                }
            }
        } else {
            step *= 0.5;
            if step < step_tolerance {
                converged = true;
                break;
            }
        }
    }
    SearchOutcome { x: base, value: f_base, iterations, converged: converged || f_base <= floor }
}

fn explore<F>(f: &mut F, x: &mut [f64], mut fx: f64, step: f64) -> f64
where
    F: FnMut(&[f64]) -> f64,
{
    for k in 0..x.len() {
        let orig = x[k];
        x[k] = orig + step;
        let up = f(x);
        if up < fx {
            fx = up;
            continue;
        }
        x[k] = orig - step;
        let down = f(x);
        if down < fx {
            fx = down;
            continue;
        }
        x[k] = orig;
    }
    fx
}
