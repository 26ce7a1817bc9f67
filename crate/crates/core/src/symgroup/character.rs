use super::perm::Permutation;
use super::tableau::validate_partition;
use crate::error::Result;
use crate::exactalg::{rat, Rational};

/// Cycle type of a permutation, parts sorted decreasingly.
pub fn cycle_type(p: &Permutation) -> Vec<u8> {
    let mut seen = vec![false; p.degree() + 1];
    let mut parts = Vec::new();
    for start in 1..=p.degree() as u8 {
        if seen[start as usize] {
            continue;
        }
        let mut len = 1u8;
        seen[start as usize] = true;
        let mut cur = p.apply(start);
        while cur != start {
            seen[cur as usize] = true;
            len += 1;
            cur = p.apply(cur);
        }
        parts.push(len);
    }
    parts.sort_unstable_by(|a, b| b.cmp(a));
    parts
}

/// Irreducible character of `S_r` by the Murnaghan-Nakayama recursion.
pub fn character(shape: &[u8], p: &Permutation) -> Result<Rational> {
    validate_partition(shape)?;
    let mu = cycle_type(p);
    Ok(rat(mn(shape, &mu)))
}

fn mn(shape: &[u8], mu: &[u8]) -> i64 {
    if mu.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    let t = mu[0] as i64;
    let rest = &mu[1..];
    let mut total = 0i64;
    // Remove a border strip of size t spanning rows r1..=r2.
    for r1 in 0..shape.len() {
        for r2 in r1..shape.len() {
            let mut new_shape: Vec<i64> = shape.iter().map(|&p| p as i64).collect();
            for i in r1..r2 {
                new_shape[i] = shape[i + 1] as i64 - 1;
            }
            new_shape[r2] = shape[r1] as i64 - t + (r2 as i64 - r1 as i64);
            if new_shape[r2] < 0 {
                continue;
            }
            if r2 + 1 < shape.len() && new_shape[r2] < shape[r2 + 1] as i64 {
                continue;
            }
            let mut ok = true;
            for w in new_shape.windows(2) {
                if w[0] < w[1] {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            let trimmed: Vec<u8> =
                new_shape.iter().take_while(|&&p| p > 0).map(|&p| p as u8).collect();
            if trimmed.iter().map(|&p| p as i64).sum::<i64>()
                != shape.iter().map(|&p| p as i64).sum::<i64>() - t
            {
                continue;
            }
            let height = (r2 - r1) as u32;
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * mn(&trimmed, rest);
        }
    }
    total
}
