//! Dehornoy handle reduction, kept deliberately independent of the Garside
//! code so the two can check each other.

use super::BraidWord;

const STEP_CAP: usize = 50_000_000;

fn free_reduce(w: &mut Vec<i32>) {
    let mut out: Vec<i32> = Vec::with_capacity(w.len());
    for &x in w.iter() {
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    *w = out;
}

/// Leftmost-ending handle `σ_i^e u σ_i^{-e}` as `(start, end)`.
fn find_handle(w: &[i32]) -> Option<(usize, usize)> {
    for q in 0..w.len() {
        let x = w[q];
        let i = x.abs();
        for p in (0..q).rev() {
            let y = w[p];
            let j = y.abs();
            if j == i {
                if y == -x {
                    return Some((p, q));
                }
                break;
            }
            if j == i - 1 {
                break;
            }
        }
    }
    None
}

/// Reduces a word until it has no handles. Returns `None` if the step cap
/// is reached.
pub fn handle_reduce(w: &BraidWord) -> Option<BraidWord> {
    let mut units = w.unit_letters();
    let mut steps = 0usize;
    loop {
        free_reduce(&mut units);
        let Some((p, q)) = find_handle(&units) else {
            return Some(BraidWord::from_units(w.strands(), &units));
        };
        steps += 1;
        if steps > STEP_CAP {
            return None;
        }
        let i = units[p].abs();
        let e = units[p].signum();
        let mut next = Vec::with_capacity(units.len() + 2 * (q - p));
        next.extend_from_slice(&units[..p]);
        for &z in &units[p + 1..q] {
            if z.abs() == i + 1 {
                next.push(-e * (i + 1));
                next.push(z.signum() * i);
                next.push(e * (i + 1));
            } else {
                next.push(z);
            }
        }
        next.extend_from_slice(&units[q + 1..]);
        units = next;
    }
}

/// True iff the braid is trivial. A handle-free word is trivial exactly
/// when it is empty.
pub fn handle_trivial(w: &BraidWord) -> bool {
    handle_reduce(w).map(|r| r.is_empty()).unwrap_or(false)
}
