//! Random diagrams for property tests and the demo.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::gauss::{Diagram, Passage, Sign};
use crate::labeling::is_compatible;

fn random_sign<R: Rng + ?Sized>(rng: &mut R) -> Sign {
    if rng.random_bool(0.5) { Sign::Positive } else { Sign::Negative }
}

/// A random knot diagram with at most `max_crossings` crossings: the `2n`
/// passages are shuffled into one cyclic sequence.
pub fn random_knot<R: Rng + ?Sized>(rng: &mut R, max_crossings: u32) -> Diagram {
    let n = rng.random_range(0..=max_crossings);
    let mut passages = passages_for(rng, n);
    passages.shuffle(rng);
    Diagram::from_parts(vec![passages])
}

/// A random compatible diagram with `1..=max_components` components.
///
/// Passages are shuffled and cut into components at random points; cuts
/// that leave a component with nonzero net delta are rejected and redrawn.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, max_crossings: u32, max_components: usize) -> Diagram {
    loop {
        let k = rng.random_range(1..=max_components.max(1));
        if k == 1 {
            return random_knot(rng, max_crossings);
        }
        let n = rng.random_range(0..=max_crossings);
        let mut passages = passages_for(rng, n);
        passages.shuffle(rng);
        let mut cuts: Vec<usize> = (0..k - 1).map(|_| rng.random_range(0..=passages.len())).collect();
        cuts.sort_unstable();
        let mut comps = Vec::with_capacity(k);
        let mut start = 0;
        for cut in cuts.into_iter().chain([passages.len()]) {
            comps.push(passages[start..cut].to_vec());
            start = cut;
        }
        let d = Diagram::from_parts(comps);
        if is_compatible(&d).compatible {
            return d;
        }
    }
}

fn passages_for<R: Rng + ?Sized>(rng: &mut R, n: u32) -> Vec<Passage> {
    (1..=n)
        .flat_map(|c| {
            let s = random_sign(rng);
            [Passage::over(c, s), Passage::under(c, s)]
        })
        .collect()
}

/// Closure of a braid word on `strands` strands.
///
/// Generator `i` (1-based) crosses the strands at positions `i - 1` and `i`;
/// for `+i` the left strand passes over with a positive sign, for `-i` it
/// passes under with a negative sign.
pub fn braid_closure(strands: usize, word: &[i32]) -> Result<Diagram> {
    let mut seqs: Vec<Vec<Passage>> = vec![Vec::new(); strands];
    // which strand sits at each position
    let mut at: Vec<usize> = (0..strands).collect();
    for (k, &g) in word.iter().enumerate() {
        let i = g.unsigned_abs() as usize;
        if g == 0 || i >= strands {
            return Err(Error::InvalidLabeling(format!("braid generator {g} on {strands} strands")));
        }
        let id = k as u32 + 1;
        let (left, right) = (at[i - 1], at[i]);
        let (l, r) = if g > 0 {
            (Passage::over(id, Sign::Positive), Passage::under(id, Sign::Positive))
        } else {
            (Passage::under(id, Sign::Negative), Passage::over(id, Sign::Negative))
        };
        seqs[left].push(l);
        seqs[right].push(r);
        at.swap(i - 1, i);
    }
    // strand ending at position p continues as the strand starting at p
    let mut end_pos = vec![0; strands];
    for (p, &s) in at.iter().enumerate() {
        end_pos[s] = p;
    }
    let mut seen = vec![false; strands];
    let mut comps = Vec::new();
    for s0 in 0..strands {
        if seen[s0] {
            continue;
        }
        let mut comp = Vec::new();
        let mut s = s0;
        while !seen[s] {
            seen[s] = true;
            comp.extend(seqs[s].iter().copied());
            s = end_pos[s];
        }
        comps.push(comp);
    }
    Diagram::new(comps)
}

/// Closure of a random braid word of the given length.
pub fn random_braid_closure<R: Rng + ?Sized>(rng: &mut R, strands: usize, length: usize) -> Diagram {
    let word: Vec<i32> = (0..length)
        .map(|_| {
            let i = rng.random_range(1..strands.max(2)) as i32;
            if rng.random_bool(0.5) { i } else { -i }
        })
        .collect();
    braid_closure(strands.max(2), &word).expect("generators in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gauss::parse;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn trefoil_braid() {
        let ct = braid_closure(2, &[1, 1, 1]).unwrap();
        assert_eq!(ct, parse("O1+U2+O3+U1+O2+U3+").unwrap());
    }

    #[test]
    fn figure_eight_braid() {
        let f8 = braid_closure(3, &[1, -2, 1, -2]).unwrap();
        assert!(f8.is_knot());
        assert_eq!(f8.crossing_count(), 4);
        assert!(braid_closure(3, &[3]).is_err());
    }

    #[test]
    fn random_diagrams_are_valid_and_compatible() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let d = random_diagram(&mut rng, 12, 3);
            assert!(Diagram::new(d.components().to_vec()).is_ok());
            assert!(is_compatible(&d).compatible);
            assert!(d.crossing_count() <= 12);
            assert!((1..=3).contains(&d.num_components()));
        }
    }
}
