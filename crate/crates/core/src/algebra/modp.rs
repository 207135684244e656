//! Polynomials over a small prime field, lowest degree first.
//!
//! Only what the Zassenhaus factorizer needs: arithmetic, gcd, the extended
//! Euclidean algorithm and Berlekamp splitting of square-free polynomials.

pub(crate) type ModPoly = Vec<u64>;

fn trim(mut a: ModPoly) -> ModPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn deg(a: &ModPoly) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn inv(a: u64, p: u64) -> u64 {
    pow_u64(a % p, p - 2, p)
}

fn pow_u64(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub(crate) fn sub(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|k| {
                let x = a.get(k).copied().unwrap_or(0);
                let y = b.get(k).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

pub(crate) fn mul(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

pub(crate) fn div_rem(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    let db = deg(b).expect("division by zero polynomial mod p");
    let lc_inv = inv(b[db], p);
    let mut rem = a.clone();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![0u64; rem.len() - db];
    for k in (0..quot.len()).rev() {
        let c = rem[k + db] * lc_inv % p;
        if c == 0 {
            continue;
        }
        for (j, &d) in b.iter().enumerate() {
            rem[k + j] = (rem[k + j] + p - c * d % p) % p;
        }
        quot[k] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

pub(crate) fn monic(a: &ModPoly, p: u64) -> ModPoly {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => {
            let i = inv(lc, p);
            a.iter().map(|&c| c * i % p).collect()
        }
    }
}

pub(crate) fn gcd(a: &ModPoly, b: &ModPoly, p: u64) -> ModPoly {
    let (mut r0, mut r1) = (trim(a.clone()), trim(b.clone()));
    while !r1.is_empty() {
        let (_, r) = div_rem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
    }
    monic(&r0, p)
}

/// `(s, t)` with `s*a + t*b = 1`, `deg s < deg b`, `deg t < deg a`, for
/// coprime inputs.
pub(crate) fn xgcd(a: &ModPoly, b: &ModPoly, p: u64) -> (ModPoly, ModPoly) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1): (ModPoly, ModPoly) = (vec![1], Vec::new());
    let (mut t0, mut t1): (ModPoly, ModPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        let t = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    debug_assert_eq!(r0.len(), 1, "xgcd inputs must be coprime");
    let i = inv(r0[0], p);
    (
        s0.iter().map(|&c| c * i % p).collect(),
        t0.iter().map(|&c| c * i % p).collect(),
    )
}

pub(crate) fn derivative(a: &ModPoly, p: u64) -> ModPoly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| (k as u64 % p) * c % p)
            .collect(),
    )
}

fn pow_mod(base: &ModPoly, mut e: u64, modulus: &ModPoly, p: u64) -> ModPoly {
    let mut result: ModPoly = vec![1];
    let mut b = div_rem(base, modulus, p).1;
    while e > 0 {
        if e & 1 == 1 {
            result = div_rem(&mul(&result, &b, p), modulus, p).1;
        }
        b = div_rem(&mul(&b, &b, p), modulus, p).1;
        e >>= 1;
    }
    result
}

pub(crate) fn is_squarefree(f: &ModPoly, p: u64) -> bool {
    let d = derivative(f, p);
    !d.is_empty() && gcd(f, &d, p).len() == 1
}

/// Basis of the Berlekamp subalgebra `{v : v^p = v mod f}`.
fn berlekamp_basis(f: &ModPoly, p: u64) -> Vec<ModPoly> {
    let n = deg(f).unwrap();
    // rows[i] = x^(i p) mod f
    let xp = pow_mod(&vec![0, 1], p, f, p);
    let mut rows = Vec::with_capacity(n);
    let mut cur: ModPoly = vec![1];
    for _ in 0..n {
        let mut row = cur.clone();
        row.resize(n, 0);
        rows.push(row);
        cur = div_rem(&mul(&cur, &xp, p), f, p).1;
    }
    // solve v (Q - I) = 0, i.e. (Q - I)^T v^T = 0
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| {
                    let q = rows[i][j];
                    if i == j {
                        (q + p - 1) % p
                    } else {
                        q
                    }
                })
                .collect()
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(pr) = (r..n).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pr);
        let iv = inv(m[r][c], p);
        for v in m[r].iter_mut() {
            *v = *v * iv % p;
        }
        for i in 0..n {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for k in 0..n {
                    m[i][k] = (m[i][k] + p - factor * m[r][k] % p) % p;
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![0u64; n];
            v[fc] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = (p - m[row][fc]) % p;
            }
            trim(v)
        })
        .collect()
}

/// Number of irreducible factors of a monic square-free `f` mod `p`.
pub(crate) fn factor_count(f: &ModPoly, p: u64) -> usize {
    berlekamp_basis(f, p).len()
}

/// Monic irreducible factors of a monic square-free `f` mod `p`.
pub(crate) fn berlekamp(f: &ModPoly, p: u64) -> Vec<ModPoly> {
    let basis = berlekamp_basis(f, p);
    let r = basis.len();
    let mut factors = vec![f.clone()];
    for v in basis.iter().filter(|v| v.len() > 1) {
        if factors.len() == r {
            break;
        }
        let mut next = Vec::new();
        for u in factors {
            if u.len() <= 2 {
                next.push(u);
                continue;
            }
            for s in 0..p {
                let mut shifted = v.clone();
                shifted[0] = (shifted[0] + p - s) % p;
                let g = gcd(&u, &trim(shifted), p);
                if g.len() > 1 {
                    next.push(g);
                }
            }
        }
        factors = next;
    }
    factors.sort();
    factors
}
