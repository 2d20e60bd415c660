//! The published small factorizations, kept verbatim as text and parsed on
//! demand. Notation: `(a,b)*` is a double arc; `(v0,v1,…)` a directed cycle;
//! each bracketed list is one factor.

use hw_digraph::{Arc, Factor, FactorKind, Vertex};

/// The printed families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Printed {
    /// Five directed 4-cycle factors of `C_4*[2] ⊕ I_8*`.
    C4BlowupI8R0,
    /// Two K2*- and three directed 4-cycle factors of `C_4*[2] ⊕ I_8*`.
    C4BlowupI8R2,
    /// Two K2*- and nine directed 4-cycle factors of `K_12*`.
    K12R2,
    /// Four K2*- and seven directed 4-cycle factors of `K_12*`.
    K12R4,
    /// One K2*- and seven directed 4-cycle factors of `K_(4:3)*`.
    K43R1,
}

impl Printed {
    pub const ALL: [Printed; 5] =
        [Printed::C4BlowupI8R0, Printed::C4BlowupI8R2, Printed::K12R2, Printed::K12R4, Printed::K43R1];

    /// Stable name, also the fixture file stem.
    pub fn name(self) -> &'static str {
        match self {
            Printed::C4BlowupI8R0 => "c4-blowup-i8-r0",
            Printed::C4BlowupI8R2 => "c4-blowup-i8-r2",
            Printed::K12R2 => "k12-r2",
            Printed::K12R4 => "k12-r4",
            Printed::K43R1 => "k43-r1",
        }
    }

    /// The verbatim text.
    pub fn text(self) -> &'static str {
        match self {
            Printed::C4BlowupI8R0 => "[(0,1,2,3),(4,5,6,7)],[(0,3,2,1),(4,7,6,5)],[(0,5,1,4),(2,7,3,6)],[(0,4,3,7),(1,5,2,6)],[(0,7,2,5),(1,6,3,4)]",
            Printed::C4BlowupI8R2 => "[(0,1,2,3),(4,5,6,7)],[(0,3,6,5),(1,4,7,2)],[(0,5,4,1),(2,7,6,3)],[(0,4)*,(1,5)*,(2,6)*,(3,7)*],[(0,7)*,(1,6)*,(2,5)*,(3,4)*]",
            Printed::K12R2 => "[(0,6)*,(1,7)*,(2,8)*,(3,9)*,(4,10)*,(5,11)*],[(0,10)*,(4,6)*,(1,5)*,(7,11)*,(2,9)*,(3,8)*],[(0,1,2,3),(4,5,6,7),(8,9,10,11)],[(0,2,1,4),(3,5,7,6),(8,11,10,9)],[(0,3,1,8),(2,4,11,6),(5,9,7,10)],[(0,4,2,11),(1,6,8,10),(3,7,9,5)],[(0,5,8,7),(1,3,4,9),(2,10,6,11)],[(0,7,5,2),(1,10,8,4),(3,6,9,11)],[(0,8,6,1),(2,5,10,7),(3,11,9,4)],[(0,9,6,5),(1,11,4,8),(2,7,3,10)],[(0,11,1,9),(2,6,10,3),(4,7,8,5)]",
            Printed::K12R4 => "[(0,6)*,(1,7)*,(2,8)*,(3,9)*,(4,10)*,(5,11)*],[(0,10)*,(4,6)*,(1,5)*,(7,11)*,(2,9)*,(3,8)*],[(0,8)*,(2,6)*,(1,10)*,(4,7)*,(3,11)*,(5,9)*],[(0,1)*,(2,3)*,(4,5)*,(6,7)*,(8,9)*,(10,11)*],[(0,2,1,3),(4,8,11,9),(5,7,10,6)],[(0,3,10,5),(1,8,6,11),(2,4,9,7)],[(0,4,11,2),(1,6,10,9),(3,5,8,7)],[(0,5,6,9),(1,2,11,4),(3,7,8,10)],[(0,7,9,11),(1,4,3,6),(2,10,8,5)],[(0,9,10,7),(1,11,6,8),(2,5,3,4)],[(0,11,8,4),(1,9,6,3),(2,7,5,10)]",
            Printed::K43R1 => "[(0,4,2,5),(1,8,3,11),(6,9,7,10)],[(0,5,1,7),(2,9,4,11),(3,8,6,10)],[(0,7,1,9),(2,4,3,10),(5,11,6,8)],[(0,8,1,10),(2,7,3,5),(4,9,6,11)],[(0,9,2,11),(1,5,3,6),(4,10,7,8)],[(0,10,4,8),(1,11,5,9),(2,6,3,7)],[(0,11,3,4),(1,6,2,10),(5,8,7,9)],[(0,6)*,(1,4)*,(2,8)*,(3,9)*,(5,10)*,(7,11)*]",
        }
    }
}

/// Error from [`parse_factor_list`], with the byte offset of the problem.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed factor list at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

/// Parses the bracket notation. A factor made only of starred pairs is a
/// K2*-factor; otherwise every item must be an unstarred cycle and the
/// factor's kind is the directed cycle length of its first cycle.
pub fn parse_factor_list(text: &str) -> Result<Vec<Factor>, ParseError> {
    let err = |offset: usize, message: &str| ParseError { offset, message: message.to_string() };
    let bytes = text.as_bytes();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && (bytes[*pos] as char).is_whitespace() {
            *pos += 1;
        }
    };
    let mut factors = Vec::new();
    loop {
        skip_ws(&mut pos);
        if pos >= bytes.len() {
            break;
        }
        if !factors.is_empty() {
            if bytes[pos] != b',' {
                return Err(err(pos, "expected ',' between factors"));
            }
            pos += 1;
            skip_ws(&mut pos);
        }
        if bytes.get(pos) != Some(&b'[') {
            return Err(err(pos, "expected '['"));
        }
        pos += 1;
        let mut cycles: Vec<Vec<Vertex>> = Vec::new();
        let mut pairs: Vec<(Vertex, Vertex)> = Vec::new();
        loop {
            skip_ws(&mut pos);
            if bytes.get(pos) != Some(&b'(') {
                return Err(err(pos, "expected '('"));
            }
            let close = text[pos..].find(')').ok_or_else(|| err(pos, "unclosed '('"))? + pos;
            let items: Result<Vec<Vertex>, _> =
                text[pos + 1..close].split(',').map(|s| s.trim().parse::<Vertex>()).collect();
            let items = items.map_err(|_| err(pos, "expected vertex numbers"))?;
            pos = close + 1;
            if bytes.get(pos) == Some(&b'*') {
                pos += 1;
                if items.len() != 2 {
                    return Err(err(pos, "a double arc has two ends"));
                }
                pairs.push((items[0], items[1]));
            } else {
                if items.len() < 2 {
                    return Err(err(pos, "a cycle needs at least two vertices"));
                }
                cycles.push(items);
            }
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b']') => {
                    pos += 1;
                    break;
                }
                _ => return Err(err(pos, "expected ',' or ']'")),
            }
        }
        let factor = match (cycles.is_empty(), pairs.is_empty()) {
            (true, false) => Factor::double_arcs(pairs),
            (false, true) => Factor::directed_cycles(&cycles),
            _ => return Err(err(pos, "a factor mixes double arcs and cycles")),
        };
        factors.push(factor);
    }
    Ok(factors)
}

/// The factors of a printed family, in printed order.
pub fn printed_factors(p: Printed) -> Vec<Factor> {
    parse_factor_list(p.text()).expect("printed families are well formed")
}

/// Formats factors back into the bracket notation (used for diagnostics and
/// round-trip tests). K2*-factors are listed as starred pairs `(x,y)*` with
/// `x < y`; cycle factors as cycles starting at their smallest vertex.
pub fn format_factor_list(factors: &[Factor]) -> String {
    let mut out = Vec::new();
    for f in factors {
        let items: Vec<String> = match f.kind {
            FactorKind::K2Star => f
                .arcs
                .iter()
                .filter(|a| a.tail < a.head)
                .map(|a| format!("({},{})*", a.tail, a.head))
                .collect(),
            _ => directed_cycles_of(f)
                .into_iter()
                .map(|c| format!("({})", c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")))
                .collect(),
        };
        out.push(format!("[{}]", items.join(",")));
    }
    out.join(",")
}

fn directed_cycles_of(f: &Factor) -> Vec<Vec<Vertex>> {
    let succ: std::collections::BTreeMap<Vertex, Vertex> =
        f.arcs.iter().map(|a: &Arc| (a.tail, a.head)).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut cycles = Vec::new();
    for &start in succ.keys() {
        if seen.contains(&start) {
            continue;
        }
        let mut c = vec![start];
        seen.insert(start);
        let mut x = succ[&start];
        while x != start && seen.insert(x) {
            c.push(x);
            x = match succ.get(&x) {
                Some(&y) => y,
                None => break,
            };
        }
        cycles.push(c);
    }
    cycles
}
