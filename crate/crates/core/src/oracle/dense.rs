use crate::error::{Error, Result};
use crate::field::{Field, PrimeField};
use crate::sparse::SparsePoly;

/// Largest number of variables [`dense_gcd`] accepts.
pub const MAX_VARS: usize = 4;
/// Largest partial degree [`dense_gcd`] accepts.
pub const MAX_DEGREE: u32 = 12;

// A polynomial in F_p[x_{k+1}, ..., x_n][x_k] at level n - k + 1; level 0 is F_p.
// P holds coefficients of increasing powers of the main variable, with no
// trailing zeros, so the zero polynomial is P(vec![]).
#[derive(Debug, Clone, PartialEq, Eq)]
enum Node {
    C(u64),
    P(Vec<Node>),
}

/// Dense recursive polynomial over `F_p` with `x_1` as the outermost variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DensePoly {
    nvars: usize,
    root: Node,
}

fn zero(level: usize) -> Node {
    if level == 0 {
        Node::C(0)
    } else {
        Node::P(Vec::new())
    }
}

fn constant(level: usize, c: u64) -> Node {
    if level == 0 {
        Node::C(c)
    } else if c == 0 {
        Node::P(Vec::new())
    } else {
        Node::P(vec![constant(level - 1, c)])
    }
}

fn is_zero(a: &Node) -> bool {
    match a {
        Node::C(c) => *c == 0,
        Node::P(v) => v.is_empty(),
    }
}

fn trim(mut v: Vec<Node>) -> Node {
    while v.last().is_some_and(is_zero) {
        v.pop();
    }
    Node::P(v)
}

fn children(a: &Node) -> &[Node] {
    match a {
        Node::P(v) => v,
        Node::C(_) => unreachable!("constants have no children"),
    }
}

fn add(f: &PrimeField, a: &Node, b: &Node) -> Node {
    match (a, b) {
        (Node::C(x), Node::C(y)) => Node::C(f.add(x, y)),
        (Node::P(x), Node::P(y)) => {
            let (long, short) = if x.len() >= y.len() { (x, y) } else { (y, x) };
            let mut out = long.clone();
            for (o, s) in out.iter_mut().zip(short) {
                *o = add(f, o, s);
            }
            trim(out)
        }
        _ => unreachable!("level mismatch"),
    }
}

fn scale(f: &PrimeField, a: &Node, c: u64) -> Node {
    match a {
        Node::C(x) => Node::C(f.mul(x, &c)),
        Node::P(_) if c == 0 => Node::P(Vec::new()),
        Node::P(v) => Node::P(v.iter().map(|x| scale(f, x, c)).collect()),
    }
}

fn sub(f: &PrimeField, a: &Node, b: &Node) -> Node {
    add(f, a, &scale(f, b, f.neg(&1)))
}

fn mul(f: &PrimeField, level: usize, a: &Node, b: &Node) -> Node {
    match (a, b) {
        (Node::C(x), Node::C(y)) => Node::C(f.mul(x, y)),
        (Node::P(x), Node::P(y)) => {
            if x.is_empty() || y.is_empty() {
                return zero(level);
            }
            let mut out = vec![zero(level - 1); x.len() + y.len() - 1];
            for (i, u) in x.iter().enumerate() {
                for (j, v) in y.iter().enumerate() {
                    out[i + j] = add(f, &out[i + j], &mul(f, level - 1, u, v));
                }
            }
            trim(out)
        }
        _ => unreachable!("level mismatch"),
    }
}

// x^k * a in the main variable
fn shift(level: usize, a: &Node, k: usize) -> Node {
    let v = children(a);
    if v.is_empty() {
        return a.clone();
    }
    let mut out = vec![zero(level - 1); k];
    out.extend(v.iter().cloned());
    Node::P(out)
}

// Lexicographically leading coefficient.
fn lex_lead(a: &Node) -> u64 {
    match a {
        Node::C(c) => *c,
        Node::P(v) => v.last().map_or(0, lex_lead),
    }
}

// a / b when b divides a exactly.
fn div_exact(f: &PrimeField, level: usize, a: &Node, b: &Node) -> Option<Node> {
    if let (Node::C(x), Node::C(y)) = (a, b) {
        return f.div(x, y).ok().map(Node::C);
    }
    let bv = children(b);
    let db = bv.len().checked_sub(1)?;
    let mut r = a.clone();
    let mut q = vec![zero(level - 1); children(a).len().saturating_sub(db)];
    while !is_zero(&r) {
        let rv = children(&r);
        let dr = rv.len() - 1;
        if dr < db {
            return None;
        }
        let c = div_exact(f, level - 1, &rv[dr], &bv[db])?;
        let term = shift(level, &Node::P(vec![c.clone()]), dr - db);
        r = sub(f, &r, &mul(f, level, &term, b));
        q[dr - db] = c;
    }
    Some(trim(q))
}

// lc(b)^k a mod b, one factor of lc(b) per reduction step.
fn pseudo_rem(f: &PrimeField, level: usize, a: &Node, b: &Node) -> Node {
    let bv = children(b);
    let db = bv.len() - 1;
    let lb = Node::P(vec![bv[db].clone()]);
    let mut r = a.clone();
    while children(&r).len() > db {
        let rv = children(&r);
        let dr = rv.len() - 1;
        let lr = shift(level, &Node::P(vec![rv[dr].clone()]), dr - db);
        r = sub(f, &mul(f, level, &lb, &r), &mul(f, level, &lr, b));
    }
    r
}

// The value of `a` if it is a nonzero constant.
fn as_unit(a: &Node) -> Option<u64> {
    match a {
        Node::C(c) => (*c != 0).then_some(*c),
        Node::P(v) if v.len() == 1 => as_unit(&v[0]),
        Node::P(_) => None,
    }
}

fn size(a: &Node) -> usize {
    match a {
        Node::C(_) => 1,
        Node::P(v) => v.iter().map(size).sum::<usize>() + 1,
    }
}

// gcd of the coefficients in the main variable, at level - 1.
fn content(f: &PrimeField, level: usize, a: &Node) -> Node {
    let mut cs: Vec<&Node> = children(a).iter().filter(|c| !is_zero(c)).collect();
    cs.sort_by_key(|c| size(c));
    let mut g = zero(level - 1);
    for c in cs {
        g = gcd(f, level - 1, &g, c);
        if as_unit(&g).is_some() {
            return constant(level - 1, 1);
        }
    }
    g
}

fn primitive(f: &PrimeField, level: usize, a: &Node) -> (Node, Node) {
    let c = content(f, level, a);
    if let Some(u) = as_unit(&c) {
        let inv = f.inv(&u).expect("nonzero");
        return (c, scale(f, a, inv));
    }
    let lifted = Node::P(vec![c.clone()]);
    let p = div_exact(f, level, a, &lifted).expect("content divides");
    (c, p)
}

// gcd up to a unit of F_p.
fn gcd(f: &PrimeField, level: usize, a: &Node, b: &Node) -> Node {
    if is_zero(a) {
        return b.clone();
    }
    if is_zero(b) {
        return a.clone();
    }
    if level == 0 || as_unit(a).is_some() || as_unit(b).is_some() {
        return constant(level, 1);
    }
    let (ca, pa) = primitive(f, level, a);
    let (cb, pb) = primitive(f, level, b);
    let c = gcd(f, level - 1, &ca, &cb);
    let (mut r0, mut r1) = if children(&pa).len() >= children(&pb).len() {
        (pa, pb)
    } else {
        (pb, pa)
    };
    while !is_zero(&r1) {
        let r = pseudo_rem(f, level, &r0, &r1);
        r0 = r1;
        r1 = if is_zero(&r) {
            r
        } else {
            primitive(f, level, &r).1
        };
    }
    mul(f, level, &Node::P(vec![c]), &r0)
}

impl DensePoly {
    pub fn from_sparse(field: &PrimeField, a: &SparsePoly<u64>) -> Self {
        let n = a.nvars();
        let mut root = zero(n);
        for (c, e) in a.terms() {
            let mut term = constant(0, *c);
            for k in (0..n).rev() {
                let mut v = vec![zero(n - k - 1); e[k] as usize];
                v.push(term);
                term = Node::P(v);
            }
            root = add(field, &root, &term);
        }
        DensePoly { nvars: n, root }
    }

    pub fn to_sparse(&self, field: &PrimeField) -> SparsePoly<u64> {
        fn walk(a: &Node, prefix: &mut Vec<u32>, out: &mut Vec<(u64, Vec<u32>)>) {
            match a {
                Node::C(c) => {
                    if *c != 0 {
                        out.push((*c, prefix.clone()));
                    }
                }
                Node::P(v) => {
                    for (i, c) in v.iter().enumerate() {
                        prefix.push(i as u32);
                        walk(c, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut terms = Vec::new();
        walk(&self.root, &mut Vec::new(), &mut terms);
        SparsePoly::from_terms(field, self.nvars, terms)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        is_zero(&self.root)
    }

    /// Largest exponent of any variable.
    pub fn max_partial_degree(&self) -> u32 {
        fn walk(a: &Node, level: usize, out: &mut [u32]) {
            if let Node::P(v) = a {
                let i = out.len() - level;
                out[i] = out[i].max(v.len().saturating_sub(1) as u32);
                for c in v {
                    walk(c, level - 1, out);
                }
            }
        }
        let mut degs = vec![0; self.nvars];
        walk(&self.root, self.nvars, &mut degs);
        degs.into_iter().max().unwrap_or(0)
    }
}

/// Lex-monic gcd by recursive content and primitive pseudo-remainder
/// sequences over `F_p[x_n]...[x_1]`. Small inputs only.
pub fn dense_gcd(field: &PrimeField, a: &DensePoly, b: &DensePoly) -> Result<DensePoly> {
    if a.nvars != b.nvars {
        return Err(Error::InvalidInput(format!(
            "inputs have {} and {} variables",
            a.nvars, b.nvars
        )));
    }
    if a.nvars > MAX_VARS {
        return Err(Error::BudgetExceeded(format!(
            "{} variables (limit {MAX_VARS})",
            a.nvars
        )));
    }
    let d = a.max_partial_degree().max(b.max_partial_degree());
    if d > MAX_DEGREE {
        return Err(Error::BudgetExceeded(format!(
            "partial degree {d} (limit {MAX_DEGREE})"
        )));
    }
    let g = gcd(field, a.nvars, &a.root, &b.root);
    let lead = lex_lead(&g);
    let root = if lead == 0 {
        g
    } else {
        scale(field, &g, field.inv(&lead)?)
    };
    Ok(DensePoly {
        nvars: a.nvars,
        root,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(f: &PrimeField, n: usize, t: &[(u64, &[u32])]) -> SparsePoly<u64> {
        SparsePoly::from_terms(f, n, t.iter().map(|(c, e)| (f.from_u64(*c), e.to_vec())))
    }

    fn dgcd(f: &PrimeField, a: &SparsePoly<u64>, b: &SparsePoly<u64>) -> SparsePoly<u64> {
        dense_gcd(
            f,
            &DensePoly::from_sparse(f, a),
            &DensePoly::from_sparse(f, b),
        )
        .unwrap()
        .to_sparse(f)
    }

    #[test]
    fn difference_of_squares_over_f7() {
        let f = PrimeField::new(7).unwrap();
        let a = sp(&f, 2, &[(1, &[2, 0]), (6, &[0, 2])]);
        let b = sp(&f, 2, &[(1, &[1, 0]), (6, &[0, 1])]);
        assert_eq!(dgcd(&f, &a, &b), sp(&f, 2, &[(1, &[1, 0]), (6, &[0, 1])]));
    }

    #[test]
    fn self_and_one() {
        let f = PrimeField::new(101).unwrap();
        let a = sp(&f, 3, &[(5, &[1, 2, 0]), (7, &[0, 0, 3]), (2, &[0, 0, 0])]);
        assert_eq!(dgcd(&f, &a, &a), a.lex_monic(&f));
        let one = sp(&f, 3, &[(1, &[0, 0, 0])]);
        assert_eq!(dgcd(&f, &a, &one), one);
    }

    #[test]
    fn round_trip_through_dense() {
        let f = PrimeField::new(13).unwrap();
        let a = sp(
            &f,
            3,
            &[
                (5, &[1, 2, 0]),
                (7, &[0, 0, 3]),
                (2, &[0, 0, 0]),
                (1, &[4, 0, 1]),
            ],
        );
        let d = DensePoly::from_sparse(&f, &a);
        assert_eq!(d.max_partial_degree(), 4);
        assert_eq!(d.to_sparse(&f), a);
    }

    #[test]
    fn content_in_later_variables() {
        // (x2 + 1)(x1 + x3) and (x2 + 1)(x1 x3 + 2)
        let f = PrimeField::new(101).unwrap();
        let a = sp(
            &f,
            3,
            &[
                (1, &[1, 1, 0]),
                (1, &[1, 0, 0]),
                (1, &[0, 1, 1]),
                (1, &[0, 0, 1]),
            ],
        );
        let b = sp(
            &f,
            3,
            &[
                (1, &[1, 1, 1]),
                (1, &[1, 0, 1]),
                (2, &[0, 1, 0]),
                (2, &[0, 0, 0]),
            ],
        );
        assert_eq!(
            dgcd(&f, &a, &b),
            sp(&f, 3, &[(1, &[0, 1, 0]), (1, &[0, 0, 0])])
        );
    }

    #[test]
    fn budget() {
        let f = PrimeField::new(101).unwrap();
        let big = DensePoly::from_sparse(&f, &sp(&f, 1, &[(1, &[13])]));
        assert!(matches!(
            dense_gcd(&f, &big, &big),
            Err(Error::BudgetExceeded(_))
        ));
        let wide = DensePoly::from_sparse(&f, &sp(&f, 5, &[(1, &[1, 0, 0, 0, 0])]));
        assert!(matches!(
            dense_gcd(&f, &wide, &wide),
            Err(Error::BudgetExceeded(_))
        ));
    }
}
