//! Not-all-equal satisfiability over exactly-3-literal clauses.
//!
//! A clause is NAE-satisfied when its three literals are neither all true
//! nor all false. Complementing an assignment preserves that, so witnesses
//! come in pairs and the brute-force solver only reports the one that is
//! lexicographically first with false below true.

use alloc::string::String;
use alloc::vec::Vec;

/// A possibly negated variable. Variables are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Literal {
    pub var: u32,
    pub negated: bool,
}

impl Literal {
    pub fn pos(var: u32) -> Self {
        Literal { var, negated: false }
    }

    pub fn neg(var: u32) -> Self {
        Literal { var, negated: true }
    }
}

impl core::fmt::Display for Literal {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.negated {
            write!(f, "~x{}", self.var)?;
        } else {
            write!(f, "x{}", self.var)?;
        }
        Ok(())
    }
}

/// Exactly three literals; repeats are allowed.
pub type Clause = [Literal; 3];

/// Why a formula failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("literal uses variable 0; variables are 1-based")]
    ZeroVariable,
    #[error("clause {clause} uses variable {var}, but the formula has {num_vars}")]
    VariableOutOfRange { clause: usize, var: u32, num_vars: u32 },
}

/// A CNF formula whose clauses all have exactly three literals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: u32,
    clauses: Vec<Clause>,
}

impl CnfFormula {
    pub fn new(num_vars: u32, clauses: Vec<Clause>) -> Result<Self, FormulaError> {
        for (idx, clause) in clauses.iter().enumerate() {
            for lit in clause {
                if lit.var == 0 {
                    return Err(FormulaError::ZeroVariable);
                }
                if lit.var > num_vars {
                    return Err(FormulaError::VariableOutOfRange {
                        clause: idx + 1,
                        var: lit.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> u32 {
        self.clauses.len() as u32
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }
}

impl core::fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, clause) in self.clauses.iter().enumerate() {
            if i > 0 {
                write!(f, " ^ ")?;
            }
            write!(f, "({} v {} v {})", clause[0], clause[1], clause[2])?;
        }
        Ok(())
    }
}

/// A total truth assignment for variables `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Assignment {
    values: Vec<bool>,
}

impl Assignment {
    pub fn new(values: Vec<bool>) -> Self {
        Assignment { values }
    }

    pub fn num_vars(&self) -> u32 {
        self.values.len() as u32
    }

    /// Value of 1-based variable `var`.
    pub fn value(&self, var: u32) -> bool {
        self.values[(var - 1) as usize]
    }

    pub fn values(&self) -> &[bool] {
        &self.values
    }

    pub fn complement(&self) -> Assignment {
        Assignment {
            values: self.values.iter().map(|v| !v).collect(),
        }
    }
}

impl core::fmt::Display for Assignment {
    /// One letter per variable, `TFT` style.
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for &v in &self.values {
            write!(f, "{}", if v { 'T' } else { 'F' })?;
        }
        Ok(())
    }
}

/// An assignment sized for a different formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("assignment covers {got} variables, formula needs {expected}")]
pub struct AssignmentLenError {
    pub expected: u32,
    pub got: u32,
}

/// DIMACS CNF parsing failures, with 1-based line numbers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DimacsError {
    #[error("line {line}: expected header `p cnf <vars> <clauses>`")]
    BadHeader { line: usize },
    #[error("line {line}: second header")]
    DuplicateHeader { line: usize },
    #[error("missing `p cnf` header")]
    MissingHeader,
    #[error("line {line}: cannot parse {token:?} as a literal")]
    BadToken { line: usize, token: String },
    #[error("line {line}: clause does not end with 0")]
    MissingTerminator { line: usize },
    #[error("line {line}: literal 0 inside a clause")]
    ZeroLiteral { line: usize },
    #[error("line {line}: clause has {got} literals, need exactly 3")]
    ClauseLength { line: usize, got: usize },
    #[error("line {line}: variable {var} exceeds declared count {num_vars}")]
    VariableOutOfRange { line: usize, var: u32, num_vars: u32 },
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: u32, found: u32 },
}

/// Parses DIMACS CNF text with one clause per line.
///
/// Comment lines start with `c`, blank lines are skipped, and every clause
/// line must hold exactly three nonzero literals followed by a single `0`.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, DimacsError> {
    let mut header: Option<(u32, u32)> = None;
    let mut clauses: Vec<Clause> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('p') {
            if header.is_some() {
                return Err(DimacsError::DuplicateHeader { line });
            }
            let mut parts = trimmed.split_whitespace();
            let ok = parts.next() == Some("p")
                && parts.next() == Some("cnf");
            let vars = parts.next().and_then(|t| t.parse::<u32>().ok());
            let count = parts.next().and_then(|t| t.parse::<u32>().ok());
            match (ok, vars, count, parts.next()) {
                (true, Some(v), Some(c), None) => header = Some((v, c)),
                _ => return Err(DimacsError::BadHeader { line }),
            }
            continue;
        }
        let (num_vars, _) = header.ok_or(DimacsError::MissingHeader)?;
        let mut tokens: Vec<i64> = Vec::new();
        for tok in trimmed.split_whitespace() {
            let value = tok.parse::<i64>().map_err(|_| DimacsError::BadToken {
                line,
                token: String::from(tok),
            })?;
            tokens.push(value);
        }
        if tokens.last() != Some(&0) {
            return Err(DimacsError::MissingTerminator { line });
        }
        let body = &tokens[..tokens.len() - 1];
        if body.contains(&0) {
            return Err(DimacsError::ZeroLiteral { line });
        }
        if body.len() != 3 {
            return Err(DimacsError::ClauseLength { line, got: body.len() });
        }
        let mut lits = [Literal::pos(1); 3];
        for (slot, &value) in body.iter().enumerate() {
            let var = value.unsigned_abs();
            if var > num_vars as u64 {
                return Err(DimacsError::VariableOutOfRange {
                    line,
                    var: var.min(u32::MAX as u64) as u32,
                    num_vars,
                });
            }
            lits[slot] = Literal {
                var: var as u32,
                negated: value < 0,
            };
        }
        clauses.push(lits);
    }
    let (num_vars, declared) = header.ok_or(DimacsError::MissingHeader)?;
    if declared != clauses.len() as u32 {
        return Err(DimacsError::ClauseCountMismatch {
            declared,
            found: clauses.len() as u32,
        });
    }
    Ok(CnfFormula::new(num_vars, clauses).expect("literal ranges were checked per line"))
}

/// True when every clause has at least one true and one false literal.
pub fn is_nae_satisfied(
    formula: &CnfFormula,
    assignment: &Assignment,
) -> Result<bool, AssignmentLenError> {
    if assignment.num_vars() != formula.num_vars() {
        return Err(AssignmentLenError {
            expected: formula.num_vars(),
            got: assignment.num_vars(),
        });
    }
    Ok(formula.clauses().iter().all(|clause| {
        let mut any_true = false;
        let mut any_false = false;
        for lit in clause {
            if assignment.value(lit.var) != lit.negated {
                any_true = true;
            } else {
                any_false = true;
            }
        }
        any_true && any_false
    }))
}

/// Cap on brute-force search; beyond this the search space passes 16M.
pub const BRUTE_FORCE_VAR_LIMIT: u32 = 24;

/// Too many variables for exhaustive search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("brute force handles at most {limit} variables, got {vars}")]
pub struct SearchLimitError {
    pub vars: u32,
    pub limit: u32,
}

/// Exhaustive NAE search. Returns the first witness in lexicographic order
/// with `F < T` and variable 1 most significant, or `None` if unsatisfiable.
pub fn solve_nae_bruteforce(
    formula: &CnfFormula,
) -> Result<Option<Assignment>, SearchLimitError> {
    let n = formula.num_vars();
    if n > BRUTE_FORCE_VAR_LIMIT {
        return Err(SearchLimitError { vars: n, limit: BRUTE_FORCE_VAR_LIMIT });
    }
    for bits in 0u64..(1u64 << n) {
        let assignment = Assignment::new(
            (0..n).map(|i| bits >> (n - 1 - i) & 1 == 1).collect(),
        );
        if is_nae_satisfied(formula, &assignment).expect("assignment sized to formula") {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn tri(a: i32, b: i32, c: i32) -> Clause {
        [a, b, c].map(|v| Literal {
            var: v.unsigned_abs(),
            negated: v < 0,
        })
    }

    /// (x1 v x2 v x2) ^ (~x1 v x2 v x2): NAE-unsatisfiable, plain-SAT
    /// satisfiable.
    fn phi() -> CnfFormula {
        CnfFormula::new(2, vec![tri(1, 2, 2), tri(-1, 2, 2)]).unwrap()
    }

    #[test]
    fn formula_validation() {
        assert!(CnfFormula::new(3, vec![tri(1, 2, 3)]).is_ok());
        assert_eq!(
            CnfFormula::new(2, vec![tri(1, 2, 3)]),
            Err(FormulaError::VariableOutOfRange { clause: 1, var: 3, num_vars: 2 })
        );
        assert_eq!(
            CnfFormula::new(2, vec![[Literal::pos(0), Literal::pos(1), Literal::pos(2)]]),
            Err(FormulaError::ZeroVariable)
        );
    }

    #[test]
    fn parse_round_trip() {
        let text = "c a comment\np cnf 3 2\n1 -2 3 0\n-1 2 -3 0\n";
        let f = parse_dimacs(text).unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.num_clauses(), 2);
        assert_eq!(f.clauses()[0], tri(1, -2, 3));
        assert_eq!(f.clauses()[1], tri(-1, 2, -3));
        assert_eq!(f.to_string(), "(x1 v ~x2 v x3) ^ (~x1 v x2 v ~x3)");
    }

    #[test]
    fn parse_allows_blanks_and_interleaved_comments() {
        let text = "\np cnf 2 2\n\nc inner\n1 2 2 0\n-1 2 2 0\n";
        assert_eq!(parse_dimacs(text).unwrap(), phi());
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2 0\n"),
            Err(DimacsError::ClauseLength { line: 2, got: 2 })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2 1 2 0\n"),
            Err(DimacsError::ClauseLength { line: 2, got: 4 })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2 2\n"),
            Err(DimacsError::MissingTerminator { line: 2 })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 0 2 0\n"),
            Err(DimacsError::ZeroLiteral { line: 2 })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2 x 0\n"),
            Err(DimacsError::BadToken { line: 2, token: "x".to_string() })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\n1 2 3 0\n"),
            Err(DimacsError::VariableOutOfRange { line: 2, var: 3, num_vars: 2 })
        );
        assert_eq!(
            parse_dimacs("c only\n1 2 3 0\n"),
            Err(DimacsError::MissingHeader)
        );
        assert_eq!(
            parse_dimacs("p cnf 2 2\n1 2 2 0\n"),
            Err(DimacsError::ClauseCountMismatch { declared: 2, found: 1 })
        );
        assert_eq!(
            parse_dimacs("p cnf x 1\n"),
            Err(DimacsError::BadHeader { line: 1 })
        );
        assert_eq!(
            parse_dimacs("p cnf 2 1\np cnf 2 1\n1 2 2 0\n"),
            Err(DimacsError::DuplicateHeader { line: 2 })
        );
    }

    #[test]
    fn nae_needs_a_true_and_a_false() {
        let f = CnfFormula::new(3, vec![tri(1, 2, 3)]).unwrap();
        let tft = Assignment::new(vec![true, false, true]);
        let ttt = Assignment::new(vec![true, true, true]);
        let fff = Assignment::new(vec![false, false, false]);
        assert!(is_nae_satisfied(&f, &tft).unwrap());
        assert!(!is_nae_satisfied(&f, &ttt).unwrap());
        assert!(!is_nae_satisfied(&f, &fff).unwrap());
        assert_eq!(
            is_nae_satisfied(&f, &Assignment::new(vec![true])),
            Err(AssignmentLenError { expected: 3, got: 1 })
        );
    }

    #[test]
    fn complement_preserves_nae() {
        let f = CnfFormula::new(3, vec![tri(1, -2, 3), tri(-1, 2, 2)]).unwrap();
        for bits in 0..8u8 {
            let a = Assignment::new((0..3).map(|i| bits >> i & 1 == 1).collect());
            assert_eq!(
                is_nae_satisfied(&f, &a).unwrap(),
                is_nae_satisfied(&f, &a.complement()).unwrap()
            );
        }
    }

    #[test]
    fn brute_force_picks_first_witness() {
        let f = CnfFormula::new(3, vec![tri(1, 2, 3)]).unwrap();
        let found = solve_nae_bruteforce(&f).unwrap().unwrap();
        // FFF fails, FFT is the first success.
        assert_eq!(found.to_string(), "FFT");
    }

    #[test]
    fn brute_force_detects_unsat() {
        assert_eq!(solve_nae_bruteforce(&phi()).unwrap(), None);
        let same = CnfFormula::new(1, vec![tri(1, 1, 1)]).unwrap();
        assert_eq!(solve_nae_bruteforce(&same).unwrap(), None);
    }

    #[test]
    fn brute_force_guard() {
        let f = CnfFormula::new(25, vec![tri(1, 2, 3)]).unwrap();
        assert_eq!(
            solve_nae_bruteforce(&f),
            Err(SearchLimitError { vars: 25, limit: 24 })
        );
    }

    #[test]
    fn empty_formula_is_satisfiable() {
        let f = CnfFormula::new(0, vec![]).unwrap();
        let a = solve_nae_bruteforce(&f).unwrap().unwrap();
        assert_eq!(a.num_vars(), 0);
    }
}
