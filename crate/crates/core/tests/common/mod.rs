//! Brute-force helpers shared by the integration tests. Nothing here calls
//! into the library's membership or search code.

#![allow(dead_code)]

/// Membership by dynamic programming on `[0, limit]`.
pub fn dp_members(gens: &[u64], limit: u64) -> Vec<bool> {
    let mut member = vec![false; limit as usize + 1];
    member[0] = true;
    for n in 1..=limit {
        member[n as usize] = gens.iter().any(|&g| g <= n && member[(n - g) as usize]);
    }
    member
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Every subset `A` of `[1, top]` with `(A + A) ∩ [1, top] ⊆ A` and gcd 1.
/// Each one is `S ∩ [1, top]` for exactly one numerical semigroup `S`
/// generated by integers `<= top`.
pub fn closed_subsets(top: u64) -> Vec<Vec<u64>> {
    fn go(x: u64, top: u64, chosen: &mut Vec<u64>, inset: &mut Vec<bool>, out: &mut Vec<Vec<u64>>) {
        if x > top {
            if chosen.iter().fold(0, |g, &v| gcd(g, v)) == 1 {
                out.push(chosen.clone());
            }
            return;
        }
        let forced = chosen.iter().any(|&u| u < x && inset[(x - u) as usize]);
        inset[x as usize] = true;
        chosen.push(x);
        go(x + 1, top, chosen, inset, out);
        chosen.pop();
        inset[x as usize] = false;
        if !forced {
            go(x + 1, top, chosen, inset, out);
        }
    }
    let mut out = Vec::new();
    go(
        1,
        top,
        &mut Vec::new(),
        &mut vec![false; top as usize + 1],
        &mut out,
    );
    out
}
