//! Univariate factorization: Zassenhaus over the rationals and Trager's
//! norm method over towers, plus root adjunction.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::tower::{FieldElement, Tower, Q};
use super::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Adjoin a root of `minpoly` (squarefree over the tower, degree >= 2).
/// If the polynomial is reducible, the first irreducible factor in the
/// deterministic (degree, then lexicographic coefficient) order is adjoined;
/// a linear first factor returns its root in the unchanged tower.
pub fn adjoin_root(tower: &Tower, minpoly: &UniPoly) -> Result<(Tower, FieldElement)> {
    if minpoly.is_zero() || minpoly.degree() == Some(0) {
        return Err(Error::ZeroPolynomial);
    }
    if minpoly.degree().unwrap() < 2 {
        return Err(Error::Invalid("adjoin_root requires degree at least 2".into()));
    }
    let g = minpoly.gcd(&minpoly.derivative())?;
    if !g.is_constant() {
        return Err(Error::Invalid("adjoin_root requires a squarefree polynomial".into()));
    }
    let mut factors = factor_squarefree(&minpoly.monic())?;
    sort_factors(&mut factors);
    let first = factors.into_iter().next().expect("nonzero polynomial has a factor");
    adjoin_irreducible(tower, &first)
}

/// Adjoin a root of a certified-irreducible monic polynomial.
pub(crate) fn adjoin_irreducible(tower: &Tower, f: &UniPoly) -> Result<(Tower, FieldElement)> {
    let d = f.degree().expect("irreducible factor is nonzero");
    if d == 1 {
        // Root already lies in the tower.
        let root = f.coeff(0).neg().div(&f.coeff(1))?;
        return Ok((tower.clone(), root));
    }
    let minpoly: Vec<Vec<Q>> = (0..=d).map(|i| f.coeff(i).coords().to_vec()).collect();
    tower.extend_unchecked(minpoly)
}

/// Deterministic factor order: by degree, then lexicographically on the
/// coefficient coordinate vectors (constant coefficient first).
pub fn sort_factors(factors: &mut [UniPoly]) {
    factors.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| {
                let n = a.coeffs().len();
                for i in 0..n {
                    let o = a.coeff(i).cmp_coords(&b.coeff(i));
                    if o != std::cmp::Ordering::Equal {
                        return o;
                    }
                }
                std::cmp::Ordering::Equal
            })
    });
}

/// Full irreducible factorization with multiplicities (monic factors).
pub fn factor_with_multiplicity(u: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    let mut out = vec![];
    for (sf, m) in u.squarefree_factor()? {
        let mut fs = factor_squarefree(&sf)?;
        sort_factors(&mut fs);
        for f in fs {
            out.push((f, m));
        }
    }
    Ok(out)
}

/// Roots of `u` lying in its own tower, with multiplicities.
pub fn roots_in_tower(u: &UniPoly) -> Result<Vec<(FieldElement, u32)>> {
    let mut out = vec![];
    for (f, m) in factor_with_multiplicity(u)? {
        if f.degree() == Some(1) {
            out.push((f.coeff(0).neg().div(&f.coeff(1))?, m));
        }
    }
    Ok(out)
}

/// Irreducible factorization of a squarefree polynomial over its tower.
/// Returns monic factors (unsorted).
pub fn factor_squarefree(u: &UniPoly) -> Result<Vec<UniPoly>> {
    let tower = u.tower().clone();
    match u.degree() {
        None => return Err(Error::ZeroPolynomial),
        Some(0) => return Ok(vec![]),
        Some(1) => return Ok(vec![u.monic()]),
        _ => {}
    }
    if tower.depth() == 0 {
        factor_squarefree_rational(u)
    } else {
        factor_squarefree_trager(u)
    }
}

// ---------------------------------------------------------------------------
// Trager's method over a proper tower.
// ---------------------------------------------------------------------------

fn element_as_top_poly(e: &FieldElement, sub: &Tower) -> UniPoly {
    let chunk = sub.degree();
    let coords = e.coords();
    let coeffs: Vec<FieldElement> = coords
        .chunks(chunk)
        .map(|c| FieldElement::from_coords(sub, c.to_vec()))
        .collect();
    UniPoly::from_coeffs(sub.clone(), coeffs)
}

fn top_minpoly(tower: &Tower, sub: &Tower) -> UniPoly {
    let level = tower.levels().last().unwrap();
    let coeffs: Vec<FieldElement> = level
        .minpoly
        .iter()
        .map(|c| FieldElement::from_coords(sub, c.clone()))
        .collect();
    UniPoly::from_coeffs(sub.clone(), coeffs)
}

fn factor_squarefree_trager(u: &UniPoly) -> Result<Vec<UniPoly>> {
    let tower = u.tower().clone();
    let sub = tower.prefix(tower.depth() - 1);
    let theta = FieldElement::generator(&tower, tower.depth() - 1);
    let minpoly = top_minpoly(&tower, &sub);
    let dtheta = minpoly.degree().unwrap();
    let un = u.monic();
    let du = un.degree().unwrap();

    for s in 0i64.. {
        // v(t) = u(t - s*theta)
        let shift = theta.mul_rational(&Q::from_integer((-s).into()));
        let v = un.shift(&shift);
        // Norm via evaluation/interpolation in t over the subtower.
        let bound = du * dtheta + 1;
        let mut nodes = Vec::with_capacity(bound);
        let mut values = Vec::with_capacity(bound);
        for x0 in 0..bound as i64 {
            let node = Q::from_integer(x0.into());
            let a = element_as_top_poly(&v.eval_rational(&node), &sub);
            values.push(minpoly.resultant(&a)?);
            nodes.push(node);
        }
        let norm = interpolate_sub(&sub, &nodes, &values);
        let norm = norm.monic();
        let g = norm.gcd(&norm.derivative())?;
        if !g.is_constant() {
            continue; // norm not squarefree; try the next shift
        }
        let sub_factors = factor_squarefree(&norm)?;
        let mut out = vec![];
        let back = theta.mul_rational(&Q::from_integer(s.into()));
        for nf in sub_factors {
            let lifted = nf.lift(&tower);
            let shifted = lifted.shift(&back);
            let f = un.gcd(&shifted)?;
            if !f.is_constant() {
                out.push(f.monic());
            }
        }
        debug_assert_eq!(
            out.iter().map(|f| f.degree().unwrap()).sum::<usize>(),
            du,
            "Trager factors must cover the full degree"
        );
        return Ok(out);
    }
    unreachable!()
}

fn interpolate_sub(tower: &Tower, nodes: &[Q], values: &[FieldElement]) -> UniPoly {
    let mut acc = UniPoly::zero(tower);
    for (i, v) in values.iter().enumerate() {
        if v.is_zero() {
            continue;
        }
        let mut basis = UniPoly::one(tower);
        let mut denom = Q::one();
        for (j, xj) in nodes.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = basis.mul(&UniPoly::from_rationals(tower, &[-xj.clone(), Q::one()]));
            denom *= &nodes[i] - xj;
        }
        acc = acc.add(&basis.mul_elem(&v.mul_rational(&denom.recip())));
    }
    acc
}

// ---------------------------------------------------------------------------
// Zassenhaus over the rationals.
// ---------------------------------------------------------------------------

fn factor_squarefree_rational(u: &UniPoly) -> Result<Vec<UniPoly>> {
    let tower = u.tower().clone();
    // Clear denominators to a primitive integer polynomial.
    let mut den = BigInt::one();
    for c in u.coeffs() {
        let q = c.to_rational().expect("rational tower element");
        den = den.lcm(q.denom());
    }
    let ints: Vec<BigInt> = u
        .coeffs()
        .iter()
        .map(|c| {
            let q = c.to_rational().unwrap();
            q.numer() * (&den / q.denom())
        })
        .collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let prim: Vec<BigInt> = ints.iter().map(|c| c / &content).collect();

    // Monic transform: f*(x) = a^{n-1} f(x/a), a = leading coefficient,
    // so coeff_i(f*) = c_i * a^{n-1-i} for i < n and 1 for i = n.
    let n = prim.len() - 1;
    let a = prim[n].clone();
    let mut monic: Vec<BigInt> = Vec::with_capacity(prim.len());
    for (i, c) in prim.iter().enumerate() {
        if i == n {
            monic.push(BigInt::one());
        } else {
            monic.push(c * a.pow((n - 1 - i) as u32));
        }
    }

    let int_factors = zassenhaus_monic(&monic);

    // Map back: g(x) irreducible factor of f* => primitive part of g(a x).
    let mut out = vec![];
    for g in int_factors {
        let m = g.len() - 1;
        let scaled: Vec<BigInt> = g.iter().enumerate().map(|(i, c)| c * a.pow(i as u32)).collect();
        let cont = scaled.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let pp: Vec<BigInt> = scaled.iter().map(|c| c / &cont).collect();
        let coeffs: Vec<FieldElement> = pp
            .iter()
            .map(|c| FieldElement::from_rational(&tower, BigRational::from_integer(c.clone())))
            .collect();
        let f = UniPoly::from_coeffs(tower.clone(), coeffs).monic();
        debug_assert_eq!(f.degree(), Some(m));
        out.push(f);
    }
    debug_assert_eq!(
        out.iter().map(|f| f.degree().unwrap()).sum::<usize>(),
        u.degree().unwrap()
    );
    Ok(out)
}

/// Factor a squarefree monic integer polynomial into monic integer
/// irreducibles.
fn zassenhaus_monic(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.to_vec()];
    }
    // Choose a prime keeping f squarefree mod p.
    let primes: [u64; 12] = [3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
    let mut chosen = None;
    for &p in &primes {
        let fp = reduce_mod(f, p);
        if fp.len() != f.len() {
            continue; // monic, cannot happen, but keep the guard
        }
        if gcd_mod(&fp, &deriv_mod(&fp, p), p).len() == 1 {
            chosen = Some(p);
            break;
        }
    }
    let p = match chosen {
        Some(p) => p,
        None => {
            // Fall back to scanning odd primes.
            let mut q = 43u64;
            loop {
                if is_prime_u64(q) {
                    let fp = reduce_mod(f, q);
                    if gcd_mod(&fp, &deriv_mod(&fp, q), q).len() == 1 {
                        break q;
                    }
                }
                q += 2;
            }
        }
    };

    let fp = reduce_mod(f, p);
    let modular = factor_mod_p(&fp, p);
    if modular.len() == 1 {
        return vec![f.to_vec()];
    }

    // Coefficient bound for monic factors (generous Mignotte-style bound).
    let height = f.iter().map(|c| c.abs()).max().unwrap();
    let bound: BigInt = (BigInt::from(n as u64 + 1)) * (BigInt::one() << n) * height;
    let target = &bound * 2 + 1;
    let mut modulus = BigInt::from(p);
    let mut k = 1usize;
    while modulus < target {
        modulus = &modulus * &modulus;
        k *= 2;
    }
    let _ = k;

    let lifted = hensel_tree(f, &modular, p, &modulus);

    // Recombination.
    let mut remaining: Vec<Vec<BigInt>> = lifted;
    let mut fr: Vec<BigInt> = f.to_vec();
    let mut out = vec![];
    let mut size = 1usize;
    'outer: while 2 * size <= remaining.len() {
        let idxs: Vec<usize> = (0..remaining.len()).collect();
        for combo in combinations(&idxs, size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = mul_mod_bigint(&cand, &remaining[i], &modulus);
            }
            symmetric(&mut cand, &modulus);
            if let Some(q) = exact_div_int(&fr, &cand) {
                out.push(cand);
                fr = q;
                let mut keep = vec![];
                for (i, m) in remaining.into_iter().enumerate() {
                    if !combo.contains(&i) {
                        keep.push(m);
                    }
                }
                remaining = keep;
                continue 'outer;
            }
        }
        size += 1;
    }
    if fr.len() > 1 {
        out.push(fr);
    }
    out
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![];
    let n = items.len();
    if k > n {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(idx.iter().map(|&i| items[i]).collect());
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn symmetric(v: &mut [BigInt], m: &BigInt) {
    let half = m / 2;
    for c in v.iter_mut() {
        let mut r = c.mod_floor(m);
        if r > half {
            r -= m;
        }
        *c = r;
    }
}

/// Exact division of integer polynomials (divisor monic); None if inexact.
fn exact_div_int(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if b.len() > a.len() {
        return None;
    }
    assert!(b.last().unwrap().is_one());
    let mut rem: Vec<BigInt> = a.to_vec();
    let db = b.len() - 1;
    let mut quot = vec![BigInt::zero(); a.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = rem.last().unwrap().clone();
        quot[da - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            let t = &c * bj;
            rem[da - db + j] -= t;
        }
        while rem.last().map(|x| x.is_zero()).unwrap_or(false) {
            rem.pop();
        }
        if rem.len() <= db {
            break;
        }
    }
    if rem.is_empty() {
        Some(quot)
    } else {
        None
    }
}

// --- arithmetic mod small prime p (u64) ---

fn reduce_mod(f: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut v: Vec<u64> = f.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
    while v.last().map(|&c| c == 0).unwrap_or(false) {
        v.pop();
    }
    v
}

fn mulp(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powp(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulp(r, a, p);
        }
        a = mulp(a, a, p);
        e >>= 1;
    }
    r
}

fn invp(a: u64, p: u64) -> u64 {
    powp(a, p - 2, p)
}

fn trim_p(mut v: Vec<u64>) -> Vec<u64> {
    while v.last().map(|&c| c == 0).unwrap_or(false) {
        v.pop();
    }
    v
}

fn deriv_mod(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![];
    }
    trim_p((1..f.len()).map(|i| mulp(f[i], i as u64 % p, p)).collect())
}

fn mul_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulp(x, y, p)) % p;
        }
    }
    trim_p(out)
}

fn rem_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    rem = trim_p(rem);
    let db = b.len() - 1;
    let lci = invp(*b.last().unwrap(), p);
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = mulp(*rem.last().unwrap(), lci, p);
        for (j, &bj) in b.iter().enumerate() {
            let t = mulp(c, bj, p);
            let idx = da - db + j;
            rem[idx] = (rem[idx] + p - t) % p;
        }
        rem = trim_p(rem);
    }
    rem
}

fn div_mod(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut rem = trim_p(a.to_vec());
    let db = b.len() - 1;
    if rem.len() <= db {
        return (vec![], rem);
    }
    let lci = invp(*b.last().unwrap(), p);
    let mut quot = vec![0u64; rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = mulp(*rem.last().unwrap(), lci, p);
        quot[da - db] = c;
        for (j, &bj) in b.iter().enumerate() {
            let t = mulp(c, bj, p);
            let idx = da - db + j;
            rem[idx] = (rem[idx] + p - t) % p;
        }
        rem = trim_p(rem);
    }
    (trim_p(quot), rem)
}

fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim_p(a.to_vec());
    let mut b = trim_p(b.to_vec());
    while !b.is_empty() {
        let r = rem_mod(&a, &b, p);
        a = b;
        b = r;
    }
    if a.is_empty() {
        return a;
    }
    let lci = invp(*a.last().unwrap(), p);
    trim_p(a.iter().map(|&c| mulp(c, lci, p)).collect())
}

fn powmod_poly(base: &[u64], e: &BigInt, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = rem_mod(base, f, p);
    let (_, bits) = e.to_radix_le(2);
    for (i, bit) in bits.iter().enumerate() {
        if *bit == 1 {
            result = rem_mod(&mul_mod(&result, &b, p), f, p);
        }
        if i + 1 < bits.len() {
            b = rem_mod(&mul_mod(&b, &b, p), f, p);
        }
    }
    result
}

/// Factor a squarefree monic polynomial mod p into monic irreducibles.
fn factor_mod_p(f: &[u64], p: u64) -> Vec<Vec<u64>> {
    let mut out = vec![];
    // Distinct-degree splitting.
    let mut rest = f.to_vec();
    let x = vec![0u64, 1u64];
    let mut h = x.clone();
    let mut d = 0usize;
    let mut blocks: Vec<(Vec<u64>, usize)> = vec![];
    while rest.len() > 1 && 2 * (d + 1) <= rest.len() - 1 {
        d += 1;
        h = powmod_poly(&h, &BigInt::from(p), &rest, p);
        // gcd(rest, h - x)
        let mut hx = h.clone();
        while hx.len() < 2 {
            hx.push(0);
        }
        hx[1] = (hx[1] + p - 1) % p;
        let hx = trim_p(hx);
        let g = gcd_mod(&rest, &hx, p);
        if g.len() > 1 {
            blocks.push((g.clone(), d));
            let (q, r) = div_mod(&rest, &g, p);
            debug_assert!(r.is_empty());
            rest = q;
            h = rem_mod(&h, &rest, p);
        }
    }
    if rest.len() > 1 {
        blocks.push((rest.clone(), rest.len() - 1));
    }
    // Equal-degree splitting.
    for (block, d) in blocks {
        split_equal_degree(&block, d, p, &mut out);
    }
    out
}

fn split_equal_degree(f: &[u64], d: usize, p: u64, out: &mut Vec<Vec<u64>>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.to_vec());
        return;
    }
    let e: BigInt = (BigInt::from(p).pow(d as u32) - 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED_u64 ^ (n as u64) << 8 ^ d as u64);
    loop {
        let a: Vec<u64> = (0..n).map(|_| rng.gen_range(0..p)).collect();
        let a = trim_p(a);
        if a.is_empty() {
            continue;
        }
        let b = powmod_poly(&a, &e, f, p);
        // g = gcd(b - 1, f)
        let mut b1 = b.clone();
        if b1.is_empty() {
            b1 = vec![p - 1];
        } else {
            b1[0] = (b1[0] + p - 1) % p;
        }
        let b1 = trim_p(b1);
        if b1.is_empty() {
            continue;
        }
        let g = gcd_mod(f, &b1, p);
        if g.len() > 1 && g.len() < f.len() {
            let (q, r) = div_mod(f, &g, p);
            debug_assert!(r.is_empty());
            split_equal_degree(&g, d, p, out);
            split_equal_degree(&q, d, p, out);
            return;
        }
    }
}

// --- Hensel lifting with BigInt coefficients mod m ---

fn mod_reduce(v: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut out: Vec<BigInt> = v.iter().map(|c| c.mod_floor(m)).collect();
    while out.last().map(|c| c.is_zero()).unwrap_or(false) {
        out.pop();
    }
    out
}

fn mul_mod_bigint(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    mod_reduce(&out, m)
}

fn add_mod_bigint(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] += y;
    }
    mod_reduce(&out, m)
}

fn sub_mod_bigint(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    let mut out = vec![BigInt::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    mod_reduce(&out, m)
}

/// Division with remainder mod m by a monic divisor.
fn divrem_mod_bigint(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let mut rem = mod_reduce(a, m);
    let db = b.len() - 1;
    debug_assert!(b.last().unwrap().is_one());
    if rem.len() <= db {
        return (vec![], rem);
    }
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    while rem.len() > db {
        let da = rem.len() - 1;
        let c = rem.last().unwrap().clone();
        quot[da - db] = c.clone();
        for (j, bj) in b.iter().enumerate() {
            let t = (&c * bj).mod_floor(m);
            let idx = da - db + j;
            rem[idx] = (&rem[idx] - t).mod_floor(m);
        }
        rem = mod_reduce(&rem, m);
    }
    (mod_reduce(&quot, m), rem)
}

/// Extended gcd of coprime polynomials mod p: s*g + t*h = 1.
fn bezout_mod_p(g: &[u64], h: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    // Extended Euclid over F_p.
    let mut r0 = g.to_vec();
    let mut r1 = h.to_vec();
    let mut s0: Vec<u64> = vec![1];
    let mut s1: Vec<u64> = vec![];
    let mut t0: Vec<u64> = vec![];
    let mut t1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = div_mod(&r0, &r1, p);
        let s2 = sub_p(&s0, &mul_mod(&q, &s1, p), p);
        let t2 = sub_p(&t0, &mul_mod(&q, &t1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 is a nonzero constant (inputs coprime).
    assert_eq!(r0.len(), 1, "bezout inputs must be coprime mod p");
    let inv = invp(r0[0], p);
    let s = trim_p(s0.iter().map(|&c| mulp(c, inv, p)).collect());
    let t = trim_p(t0.iter().map(|&c| mulp(c, inv, p)).collect());
    (s, t)
}

fn sub_p(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let mut out = vec![0u64; n];
    for (i, &x) in a.iter().enumerate() {
        out[i] = x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] = (out[i] + p - y) % p;
    }
    trim_p(out)
}

fn to_big(v: &[u64]) -> Vec<BigInt> {
    v.iter().map(|&c| BigInt::from(c)).collect()
}

/// Quadratic Hensel step: from f = g h (mod m), s g + t h = 1 (mod m)
/// to the same congruences mod m^2. h and g monic; f monic.
#[allow(clippy::too_many_arguments)]
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = sub_mod_bigint(f, &mul_mod_bigint(g, h, &m2), &m2);
    let se = mul_mod_bigint(s, &e, &m2);
    let (q, r) = divrem_mod_bigint(&se, h, &m2);
    let g_new = {
        let te = mul_mod_bigint(t, &e, &m2);
        let qg = mul_mod_bigint(&q, g, &m2);
        add_mod_bigint(&add_mod_bigint(g, &te, &m2), &qg, &m2)
    };
    let h_new = add_mod_bigint(h, &r, &m2);
    // Update the Bezout pair.
    let b = {
        let sg = mul_mod_bigint(s, &g_new, &m2);
        let th = mul_mod_bigint(t, &h_new, &m2);
        let mut sum = add_mod_bigint(&sg, &th, &m2);
        if sum.is_empty() {
            sum = vec![BigInt::zero()];
        }
        sum[0] -= 1;
        mod_reduce(&sum, &m2)
    };
    let sb = mul_mod_bigint(s, &b, &m2);
    let (c, d) = divrem_mod_bigint(&sb, &h_new, &m2);
    let s_new = sub_mod_bigint(s, &d, &m2);
    let t_new = {
        let tb = mul_mod_bigint(t, &b, &m2);
        let cg = mul_mod_bigint(&c, &g_new, &m2);
        sub_mod_bigint(&sub_mod_bigint(t, &tb, &m2), &cg, &m2)
    };
    (g_new, h_new, s_new, t_new)
}

/// Lift a monic modular factorization to the given modulus (a power of p).
fn hensel_tree(f: &[BigInt], factors: &[Vec<u64>], p: u64, modulus: &BigInt) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![mod_reduce(f, modulus)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut g0 = vec![1u64];
    for fac in left {
        g0 = mul_mod(&g0, fac, p);
    }
    let mut h0 = vec![1u64];
    for fac in right {
        h0 = mul_mod(&h0, fac, p);
    }
    let (s0, t0) = bezout_mod_p(&g0, &h0, p);
    let mut g = to_big(&g0);
    let mut h = to_big(&h0);
    let mut s = to_big(&s0);
    let mut t = to_big(&t0);
    let mut m = BigInt::from(p);
    while &m < modulus {
        let (g1, h1, s1, t1) = hensel_step(&mod_reduce(f, &(&m * &m)), &g, &h, &s, &t, &m);
        g = g1;
        h = h1;
        s = s1;
        t = t1;
        m = &m * &m;
    }
    let g = mod_reduce(&g, modulus);
    let h = mod_reduce(&h, modulus);
    let mut out = hensel_tree(&g, left, p, modulus);
    out.extend(hensel_tree(&h, right, p, modulus));
    out
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[allow(unused)]
fn bigint_sign_ok(b: &BigInt) -> bool {
    b.sign() != Sign::NoSign
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tw() -> Tower {
        Tower::rationals(2)
    }

    #[test]
    fn rational_factorization() {
        let t = tw();
        // (t^2+1)(t-3)(t+5)
        let u = UniPoly::from_ints(&t, &[1, 0, 1])
            .mul(&UniPoly::from_ints(&t, &[-3, 1]))
            .mul(&UniPoly::from_ints(&t, &[5, 1]));
        let mut fs = factor_squarefree(&u).unwrap();
        sort_factors(&mut fs);
        assert_eq!(fs.len(), 3);
        assert_eq!(fs[0], UniPoly::from_ints(&t, &[-3, 1]));
        assert_eq!(fs[1], UniPoly::from_ints(&t, &[5, 1]));
        assert_eq!(fs[2], UniPoly::from_ints(&t, &[1, 0, 1]));
    }

    #[test]
    fn irreducible_stays_whole() {
        let t = tw();
        let u = UniPoly::from_ints(&t, &[-2, 0, 1]); // t^2 - 2
        let fs = factor_squarefree(&u).unwrap();
        assert_eq!(fs.len(), 1);
        // degree-5 irreducible (Eisenstein at 2): t^5 - 2
        let v = UniPoly::from_ints(&t, &[-2, 0, 0, 0, 0, 1]);
        let fs = factor_squarefree(&v).unwrap();
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn non_monic_factorization() {
        let t = tw();
        // (2t+1)(3t-1) = 6t^2 + t - 1
        let u = UniPoly::from_ints(&t, &[-1, 1, 6]);
        let mut fs = factor_squarefree(&u).unwrap();
        sort_factors(&mut fs);
        assert_eq!(fs.len(), 2);
        // monic forms: (t + 1/2), (t - 1/3)
        assert_eq!(fs[0].coeff(0).to_rational().unwrap(), Q::new((-1).into(), 3.into()));
        assert_eq!(fs[1].coeff(0).to_rational().unwrap(), Q::new(1.into(), 2.into()));
    }

    #[test]
    fn adjoin_and_factor_over_extension() {
        let t = tw();
        // Adjoin sqrt(2).
        let (t2, r) = adjoin_root(&t, &UniPoly::from_ints(&t, &[-2, 0, 1])).unwrap();
        assert_eq!(t2.degree(), 2);
        assert_eq!(r.mul(&r), FieldElement::from_int(&t2, 2));
        // t^2 - 2 factors over Q(sqrt2) as (t - r)(t + r).
        let u = UniPoly::from_ints(&t2, &[-2, 0, 1]);
        let mut fs = factor_squarefree(&u).unwrap();
        sort_factors(&mut fs);
        assert_eq!(fs.len(), 2);
        for f in &fs {
            assert_eq!(f.degree(), Some(1));
        }
        // t^2 + 1 stays irreducible over Q(sqrt2).
        let v = UniPoly::from_ints(&t2, &[1, 0, 1]);
        assert_eq!(factor_squarefree(&v).unwrap().len(), 1);
        // t^2 - 2r (a root of t^4 - 8): degree multiplicativity via second extension.
        let minp2 = UniPoly::from_coeffs(
            t2.clone(),
            vec![r.mul_rational(&Q::from_integer((-2).into())), FieldElement::zero(&t2), FieldElement::one(&t2)],
        );
        let (t3, s) = adjoin_root(&t2, &minp2).unwrap();
        assert_eq!(t3.degree(), 4);
        assert_eq!(s.mul(&s), r.lift(&t3).mul_rational(&Q::from_integer(2.into())));
    }

    #[test]
    fn adjoin_depth_limit() {
        let t = Tower::rationals(1);
        let (t1, _) = adjoin_root(&t, &UniPoly::from_ints(&t, &[-2, 0, 1])).unwrap();
        let v = UniPoly::from_ints(&t1, &[1, 0, 1]);
        match adjoin_root(&t1, &v) {
            Err(Error::ExtensionDepthExceeded { limit }) => assert_eq!(limit, 1),
            other => panic!("expected depth error, got {:?}", other),
        }
    }

    #[test]
    fn roots_in_tower_works() {
        let t = tw();
        // (t-1)^2 (t+2) (t^2+1)
        let u = UniPoly::from_ints(&t, &[-1, 1])
            .pow(2)
            .mul(&UniPoly::from_ints(&t, &[2, 1]))
            .mul(&UniPoly::from_ints(&t, &[1, 0, 1]));
        let roots = roots_in_tower(&u).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&(FieldElement::from_int(&t, 1), 2)));
        assert!(roots.contains(&(FieldElement::from_int(&t, -2), 1)));
    }
}
