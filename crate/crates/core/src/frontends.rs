//! Source problems: 3-CNF formulas (DIMACS) and Boolean quadratic systems.
//!
//! QuadEq text format:
//!
//! ```text
//! # comments run to end of line
//! field: GF(3)
//! vars: 3
//! 2*x1*x2 + 1
//! x2 - x3
//! ```
//!
//! Statements are separated by newlines or `;`. The first statement names the
//! field (`field:` is optional); `vars:` is optional and defaults to the
//! largest variable index used.

use crate::boolalg::{SquarefreePoly, Subset, Universe, Variant};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// A 3-CNF formula; literal `+i` is `z_i`, `-i` is `¬z_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub n: usize,
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(n: usize, clauses: Vec<[i32; 3]>) -> Result<CnfFormula> {
        if n == 0 {
            return Err(Error::pre("a formula needs at least one variable"));
        }
        for c in &clauses {
            for &l in c {
                if l == 0 || l.unsigned_abs() as usize > n {
                    return Err(Error::pre(format!("literal {l} out of range 1..={n}")));
                }
            }
        }
        Ok(CnfFormula { n, clauses })
    }

    /// `assignment[i-1]` is the value of `z_i`.
    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter().any(|&l| {
                let v = assignment[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    v
                } else {
                    !v
                }
            })
        })
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.n, self.clauses.len());
        for c in &self.clauses {
            out.push_str(&format!("{} {} {} 0\n", c[0], c[1], c[2]));
        }
        out
    }
}

pub fn parse_dimacs(text: &str) -> Result<CnfFormula> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut pending: Vec<(i32, usize)> = Vec::new();
    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lno = idx + 1;
        last_line = lno;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        if line.starts_with('%') {
            break;
        }
        if line.starts_with('p') {
            if header.is_some() {
                return Err(Error::parse(lno, "duplicate header"));
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            if parts.len() != 4 || parts[0] != "p" || parts[1] != "cnf" {
                return Err(Error::parse(lno, "expected `p cnf <vars> <clauses>`"));
            }
            let n = parts[2]
                .parse()
                .map_err(|_| Error::parse(lno, "bad variable count"))?;
            let m = parts[3]
                .parse()
                .map_err(|_| Error::parse(lno, "bad clause count"))?;
            header = Some((n, m));
            continue;
        }
        let Some((n, _)) = header else {
            return Err(Error::parse(lno, "clause before header"));
        };
        for tok in line.split_whitespace() {
            let lit: i32 = tok
                .parse()
                .map_err(|_| Error::parse(lno, format!("bad literal {tok:?}")))?;
            if lit == 0 {
                clauses.push(finish_clause(&pending, lno)?);
                pending.clear();
            } else {
                if lit.unsigned_abs() as usize > n {
                    return Err(Error::parse(lno, format!("literal {lit} exceeds {n} variables")));
                }
                pending.push((lit, lno));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing `p cnf` header"));
    };
    if !pending.is_empty() {
        clauses.push(finish_clause(&pending, pending[0].1)?);
    }
    if clauses.len() != m {
        return Err(Error::parse(
            last_line.max(1),
            format!("header declares {m} clauses, found {}", clauses.len()),
        ));
    }
    CnfFormula::new(n, clauses).map_err(|e| Error::parse(1, e.to_string()))
}

/// Pads short clauses by repeating the last literal.
fn finish_clause(lits: &[(i32, usize)], lno: usize) -> Result<[i32; 3]> {
    match lits.len() {
        0 => Err(Error::parse(lno, "empty clause")),
        1..=3 => {
            let last = lits[lits.len() - 1].0;
            let mut c = [last; 3];
            for (k, &(l, _)) in lits.iter().enumerate() {
                c[k] = l;
            }
            Ok(c)
        }
        w => Err(Error::parse(lno, format!("clause of width {w} (at most 3 allowed)"))),
    }
}

/// A system `f_1 = ... = f_m = 0` of degree-≤2 polynomials in `x_1..x_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadSystemSource {
    pub field: FieldSpec,
    pub n: usize,
    pub equations: Vec<SquarefreePoly>,
}

impl QuadSystemSource {
    pub fn new(field: &FieldSpec, n: usize, equations: Vec<SquarefreePoly>) -> Result<Self> {
        let universe = Universe::new(Variant::V, n)?;
        for (i, f) in equations.iter().enumerate() {
            if f.field() != field || f.universe() != universe {
                return Err(Error::pre(format!("equation {i} has the wrong field or variables")));
            }
            if f.degree().unwrap_or(0) > 2 {
                return Err(Error::pre(format!("equation {i} has degree above 2")));
            }
        }
        Ok(QuadSystemSource {
            field: field.clone(),
            n,
            equations,
        })
    }

    pub fn universe(&self) -> Universe {
        Universe { variant: Variant::V, n: self.n }
    }

    /// Values of all equations at `point` (`point[i-1]` is `x_i`).
    pub fn eval(&self, point: &[u32]) -> Result<Vec<u32>> {
        self.equations.iter().map(|f| f.eval(point)).collect()
    }

    pub fn is_solution(&self, point: &[u32]) -> Result<bool> {
        Ok(self.eval(point)?.iter().all(|&v| v == 0))
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("field: {}\nvars: {}\n", self.field.descriptor(), self.n);
        for f in &self.equations {
            out.push_str(&f.to_string());
            out.push('\n');
        }
        out
    }
}

/// Splits into `(line, statement)` on newlines and top-level `;`, dropping
/// comments and blanks.
fn statements(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut depth = 0i32;
        let mut cur = String::new();
        for ch in line.chars() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            if ch == ';' && depth == 0 {
                out.push((idx + 1, std::mem::take(&mut cur)));
            } else {
                cur.push(ch);
            }
        }
        out.push((idx + 1, cur));
    }
    out.into_iter()
        .map(|(l, s)| (l, s.trim().to_string()))
        .filter(|(_, s)| !s.is_empty())
        .collect()
}

fn max_var(stmt: &str) -> usize {
    let b = stmt.as_bytes();
    let mut best = 0;
    let mut i = 0;
    while i < b.len() {
        if b[i] == b'x' {
            let start = i + 1;
            let mut j = start;
            while j < b.len() && b[j].is_ascii_digit() {
                j += 1;
            }
            if let Ok(v) = stmt[start..j].parse::<usize>() {
                best = best.max(v);
            }
            i = j.max(i + 1);
        } else {
            i += 1;
        }
    }
    best
}

pub fn parse_quadeq(text: &str) -> Result<QuadSystemSource> {
    let stmts = statements(text);
    let mut it = stmts.into_iter().peekable();
    let (fline, fstmt) = it.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let desc = fstmt.strip_prefix("field:").unwrap_or(&fstmt).trim();
    let field = FieldSpec::parse_descriptor(desc).map_err(|e| Error::parse(fline, e.to_string()))?;
    let mut declared = None;
    if let Some((vline, v)) = it.peek().cloned() {
        if let Some(rest) = v.strip_prefix("vars:") {
            let n: usize = rest
                .trim()
                .parse()
                .map_err(|_| Error::parse(vline, "bad variable count"))?;
            declared = Some((vline, n));
            it.next();
        }
    }
    let polys: Vec<(usize, String)> = it.collect();
    let used = polys.iter().map(|(_, s)| max_var(s)).max().unwrap_or(0);
    let n = match declared {
        Some((vline, n)) => {
            if used > n {
                return Err(Error::parse(vline, format!("x{used} used but only {n} variables declared")));
            }
            n
        }
        None => used.max(1),
    };
    let universe = Universe::new(Variant::V, n).map_err(|e| Error::parse(fline, e.to_string()))?;
    let mut equations = Vec::new();
    for (lno, s) in polys {
        let f = SquarefreePoly::parse(&field, universe, &s).map_err(|e| Error::parse(lno, e.to_string()))?;
        if f.degree().unwrap_or(0) > 2 {
            return Err(Error::parse(lno, "term of degree above 2"));
        }
        equations.push(f);
    }
    QuadSystemSource::new(&field, n, equations)
}

/// `h_l(x)` for a literal: `x_0 + x_i` for `z_i`, `x_i` for `¬z_i`. It vanishes
/// at a homogenised Boolean point exactly when the literal is true.
fn literal_form(lit: i32, universe: Universe) -> SquarefreePoly {
    let f = FieldSpec::gf2();
    let i = lit.unsigned_abs() as usize;
    let mut p = SquarefreePoly::var(&f, universe, i);
    if lit > 0 {
        p.add_term(Subset::single(0), 1);
    }
    p
}

/// Product of the three literal forms, over GF(2) in `x_0..x_n`.
pub fn clause_polynomial(clause: &[i32; 3], n: usize) -> Result<SquarefreePoly> {
    let universe = Universe::new(Variant::U, n)?;
    let mut p = SquarefreePoly::one(&FieldSpec::gf2(), universe);
    for &l in clause {
        if l == 0 || l.unsigned_abs() as usize > n {
            return Err(Error::pre(format!("literal {l} out of range 1..={n}")));
        }
        p = p.mul(&literal_form(l, universe))?;
    }
    Ok(p)
}

/// `b_i = x_i (x_i + x_0) = x_i + x_0 x_i`.
pub fn booleanity_polynomial(i: usize, n: usize) -> Result<SquarefreePoly> {
    if i == 0 || i > n {
        return Err(Error::pre(format!("variable {i} out of range 1..={n}")));
    }
    let universe = Universe::new(Variant::U, n)?;
    let f = FieldSpec::gf2();
    let xi = SquarefreePoly::var(&f, universe, i);
    let mut h = xi.clone();
    h.add_term(Subset::single(0), 1);
    xi.mul(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_examples() {
        let f = parse_dimacs("p cnf 1 1\n1 1 1 0\n").unwrap();
        assert_eq!(f, CnfFormula { n: 1, clauses: vec![[1, 1, 1]] });
        let g = parse_dimacs("p cnf 2 1\n1 -2 0\n").unwrap();
        assert_eq!(g.clauses, vec![[1, -2, -2]]);
        assert!(parse_dimacs("p cnf 4 1\n1 2 3 4 0\n").is_err());
    }

    #[test]
    fn dimacs_errors_carry_lines() {
        match parse_dimacs("c hi\np cnf 2 1\n1 3 0\n") {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("{other:?}"),
        }
        assert!(parse_dimacs("1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 2\n1 2 0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n0\n").is_err());
        assert!(parse_dimacs("p cnf 2 1\n1 2 0\n%\n0\n").is_ok());
    }

    #[test]
    fn dimacs_round_trip() {
        let f = CnfFormula::new(4, vec![[1, -2, 3], [-4, -4, -4], [2, 3, 4]]).unwrap();
        assert_eq!(parse_dimacs(&f.to_dimacs()).unwrap(), f);
    }

    #[test]
    fn quadeq_examples() {
        let s = parse_quadeq("GF(2); x1 + x2").unwrap();
        assert_eq!(s.n, 2);
        assert_eq!(s.equations.len(), 1);
        assert_eq!(s.equations[0].to_string(), "x1 + x2");

        let t = parse_quadeq("GF(2); x1 ; x1 + 1").unwrap();
        assert_eq!(t.equations.len(), 2);
        for a in 0..2 {
            assert!(!t.is_solution(&[a]).unwrap());
        }

        let u = parse_quadeq("GF(3); 2*x1*x2 + 1").unwrap();
        let f = &u.equations[0];
        assert_eq!(f.coeff(Subset::from_elems(&[1, 2])), 2);
        assert_eq!(f.constant_term(), 1);
    }

    #[test]
    fn quadeq_errors() {
        assert!(parse_quadeq("GF(2); x1*x2*x3").is_err());
        assert!(parse_quadeq("GF(6); x1").is_err());
        assert!(parse_quadeq("field: GF(2)\nvars: 1\nx2").is_err());
        assert!(parse_quadeq("GF(2); x0 + x1").is_err());
    }

    #[test]
    fn quadeq_round_trip() {
        let text = "field: GF(2^2)\nvars: 3\n# c\n(1,0)*x1*x2 + x3 + 1\nx2 ; (1,1)";
        let s = parse_quadeq(text).unwrap();
        assert_eq!(parse_quadeq(&s.to_text()).unwrap(), s);
    }

    #[test]
    fn clause_polynomial_examples() {
        let f = FieldSpec::gf2();
        let u1 = Universe::new(Variant::U, 1).unwrap();
        assert_eq!(
            clause_polynomial(&[1, 1, 1], 1).unwrap(),
            SquarefreePoly::parse(&f, u1, "x0 + x1").unwrap()
        );
        assert_eq!(
            clause_polynomial(&[-1, -1, -1], 1).unwrap(),
            SquarefreePoly::var(&f, u1, 1)
        );
    }

    #[test]
    fn clause_polynomial_detects_falsified_clauses() {
        let shapes = [[1, 2, 3], [1, -2, 3], [-1, -2, -3], [2, -2, 1], [3, 3, -1]];
        for clause in shapes {
            let p = clause_polynomial(&clause, 3).unwrap();
            for bits in 0..8u32 {
                let z: Vec<bool> = (0..3).map(|i| (bits >> i) & 1 == 1).collect();
                let mut point = vec![1];
                point.extend(z.iter().map(|&b| b as u32));
                let all_false = clause.iter().all(|&l| {
                    let v = z[l.unsigned_abs() as usize - 1];
                    if l > 0 { !v } else { v }
                });
                assert_eq!(p.eval(&point).unwrap(), all_false as u32, "{clause:?} {bits}");
            }
        }
    }

    #[test]
    fn booleanity_examples() {
        let f = FieldSpec::gf2();
        let u1 = Universe::new(Variant::U, 1).unwrap();
        let b = booleanity_polynomial(1, 1).unwrap();
        assert_eq!(b, SquarefreePoly::parse(&f, u1, "x1 + x0*x1").unwrap());
        for a1 in 0..2 {
            assert_eq!(b.eval(&[1, a1]).unwrap(), 0);
            assert_eq!(b.eval(&[0, a1]).unwrap(), a1);
        }
        assert!(booleanity_polynomial(0, 2).is_err());
    }
}
