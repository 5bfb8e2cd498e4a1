use super::map::RatMap;
use crate::field::FieldElement;
use crate::poly::Poly;
use crate::ratfunc::RatFunc;

fn trimmed_len(v: &[FieldElement]) -> usize {
    v.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i + 1)
}

fn combine(
    out: &mut [FieldElement],
    x: FieldElement,
    u: &[FieldElement],
    y: FieldElement,
    v: &[FieldElement],
) {
    for ((o, &a), &b) in out.iter_mut().zip(u).zip(v) {
        *o = x * a + y * b;
    }
}

fn push_key(key: &mut Vec<u32>, den: &[FieldElement], num: &[FieldElement]) {
    let (dl, nl) = (trimmed_len(den), trimmed_len(num));
    key.clear();
    key.push(dl as u32);
    key.push(nl as u32);
    key.extend(den[..dl].iter().rev().map(|c| c.value()));
    key.extend(num[..nl].iter().rev().map(|c| c.value()));
}

/// Smallest post-composition `σ ∘ f` in the fixed order on reduced forms,
/// together with the number of Möbius maps `σ` with `σ ∘ f = f`.
///
/// Every `σ ∘ f` is written as `(α V + β E) / E` with `E = monic(c N + d D)`
/// ranging over the `q + 1` denominators and `(α, β)` over `F^* × F`; only
/// denominators of minimal length can win.
pub fn pgl2_canonical_with_stabilizer(f: &RatMap) -> (RatMap, usize) {
    let rf = f.as_ratfunc();
    let field = rf.field();
    let width = f.degree() + 1;
    let pad = |p: &Poly| {
        let mut v = p.coeffs().to_vec();
        v.resize(width, field.zero());
        v
    };
    let (n, d) = (pad(rf.numerator()), pad(rf.denominator()));
    let zero = field.zero();
    let one = field.one();

    // (c : d) as (1 : λ) and (0 : 1)
    let mut dens: Vec<(Vec<FieldElement>, bool)> = Vec::with_capacity(field.order() as usize + 1);
    let mut buf = vec![zero; width];
    for lambda in field.elements() {
        combine(&mut buf, one, &n, lambda, &d);
        dens.push((buf.clone(), true));
    }
    dens.push((d.clone(), false));
    let min_len = dens
        .iter()
        .map(|(v, _)| trimmed_len(v))
        .min()
        .expect("nonempty");

    let mut best: Option<Vec<u32>> = None;
    let mut best_parts = (Vec::new(), Vec::new());
    let mut hits = 0usize;
    let mut key = Vec::with_capacity(2 * width + 2);
    let mut num = vec![zero; width];
    for (den, uses_n) in dens.into_iter().filter(|(v, _)| trimmed_len(v) == min_len) {
        let lead = den[min_len - 1]
            .inverse()
            .expect("nonzero leading coefficient");
        let den: Vec<FieldElement> = den.iter().map(|&c| c * lead).collect();
        let complement = if uses_n { &d } else { &n };
        for alpha in field.elements().filter(|a| !a.is_zero()) {
            for beta in field.elements() {
                combine(&mut num, alpha, complement, beta, &den);
                push_key(&mut key, &den, &num);
                match best.as_ref().map(|b| key.cmp(b)) {
                    Some(std::cmp::Ordering::Greater) => {}
                    Some(std::cmp::Ordering::Equal) => hits += 1,
                    _ => {
                        best = Some(key.clone());
                        best_parts = (num.clone(), den.clone());
                        hits = 1;
                    }
                }
            }
        }
    }
    let (num, den) = best_parts;
    let g =
        RatFunc::new(Poly::new(field, num), Poly::new(field, den)).expect("nonzero denominator");
    (
        RatMap::new(g).expect("post-composition keeps the degree"),
        hits,
    )
}

/// Canonical representative of the post-composition orbit of `f` over the
/// field of definition of `f`.
pub fn pgl2_canonical(f: &RatMap) -> RatMap {
    pgl2_canonical_with_stabilizer(f).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::GaloisField;
    use crate::moebius::Moebius;
    use rand::{Rng, SeedableRng};

    fn brute(f: &RatMap) -> (RatFunc, usize) {
        let field = f.as_ratfunc().field();
        let images: Vec<RatFunc> = Moebius::all(field)
            .map(|s| s.post(f.as_ratfunc()).unwrap())
            .collect();
        let min = images.iter().min().unwrap().clone();
        let stab = images.iter().filter(|g| **g == *f.as_ratfunc()).count();
        (min, stab)
    }

    fn random_map(rng: &mut impl Rng, field: &'static GaloisField, max_deg: usize) -> RatMap {
        loop {
            let num: Vec<FieldElement> = (0..=rng.gen_range(0..=max_deg))
                .map(|_| {
                    field
                        .element(rng.gen_range(0..field.order() as u64))
                        .unwrap()
                })
                .collect();
            let den: Vec<FieldElement> = (0..=rng.gen_range(0..=max_deg))
                .map(|_| {
                    field
                        .element(rng.gen_range(0..field.order() as u64))
                        .unwrap()
                })
                .collect();
            let (num, den) = (Poly::new(field, num), Poly::new(field, den));
            if den.is_zero() {
                continue;
            }
            if let Ok(m) = RatMap::new(RatFunc::new(num, den).unwrap()) {
                return m;
            }
        }
    }

    #[test]
    fn matches_exhaustive_minimum() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (p, k) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
            let field = GaloisField::get(p, k).unwrap();
            for _ in 0..40 {
                let f = random_map(&mut rng, field, 4);
                let (c, stab) = pgl2_canonical_with_stabilizer(&f);
                let (bc, bstab) = brute(&f);
                assert_eq!(c.as_ratfunc(), &bc, "f = {f}");
                assert_eq!(stab, bstab, "f = {f}");
            }
        }
    }

    #[test]
    fn orbit_constancy() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let field = GaloisField::prime(7).unwrap();
        let all: Vec<Moebius> = Moebius::all(field).collect();
        for _ in 0..30 {
            let f = random_map(&mut rng, field, 3);
            let s = &all[rng.gen_range(0..all.len())];
            let g = RatMap::new(s.post(f.as_ratfunc()).unwrap()).unwrap();
            assert_eq!(pgl2_canonical(&f), pgl2_canonical(&g));
            let inv = RatMap::new(f.as_ratfunc().inverse().unwrap()).unwrap();
            assert_eq!(pgl2_canonical(&f), pgl2_canonical(&inv));
        }
    }

    #[test]
    fn translations_collapse() {
        for (p, k) in [(3, 1), (5, 2)] {
            let field = GaloisField::get(p, k).unwrap();
            let t = RatMap::new(RatFunc::t(field)).unwrap();
            let t1 = RatMap::new(RatFunc::from_ints(field, &[1, 1], &[1]).unwrap()).unwrap();
            assert_eq!(pgl2_canonical(&t), pgl2_canonical(&t1));
            // t is fixed only by the identity
            assert_eq!(pgl2_canonical_with_stabilizer(&t).1, 1);
        }
    }
}
