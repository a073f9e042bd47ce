//! Line-oriented text formats.
//!
//! Blank lines and lines starting with `#` are ignored everywhere. Parse
//! errors carry the 1-based line number of the offending line.
//!
//! ```text
//! variant: omdci+          IM: 1 2 3 4        n 4          q 2 m 4
//! M: a1/1 a2/2 ...         IA: 1 3 5 6        1 2          1 3 5
//! A: a2/1 a1/2 ...                            2 3          2 5 6
//! ```
//!
//! Reduction maps start with `reduction x3c q Q m M` or `reduction cohc n N`
//! followed by one `M <pos> <gadget>` or `A <pos> <gadget>` line per
//! position, in order.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::IoError;
use crate::model::{ColoredString, Instance, SolutionPair, Variant};
use crate::reduce::{Gadget, Graph, ReductionKind, ReductionMap, X3cInstance};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn numbers<T: std::str::FromStr>(line: usize, text: &str) -> Result<Vec<T>, IoError> {
    text.split_whitespace()
        .map(|t| {
            t.parse()
                .map_err(|_| IoError::parse(line, format!("expected a number, got {t:?}")))
        })
        .collect()
}

fn keyed<'a>(line: usize, text: &'a str, key: &str) -> Result<&'a str, IoError> {
    text.strip_prefix(key)
        .and_then(|r| r.strip_prefix(':'))
        .map(str::trim)
        .ok_or_else(|| IoError::parse(line, format!("expected \"{key}:\"")))
}

fn tokens_line(key: &str, s: &ColoredString) -> String {
    if s.is_empty() {
        format!("{key}:\n")
    } else {
        format!("{key}: {s}\n")
    }
}

pub fn render_instance(inst: &Instance) -> String {
    format!(
        "variant: {}\n{}{}",
        inst.variant(),
        tokens_line("M", inst.m()),
        tokens_line("A", inst.a())
    )
}

pub fn parse_instance(text: &str) -> Result<Instance, IoError> {
    let mut lines = content_lines(text);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| IoError::parse(0, format!("missing \"{what}:\" line")))
    };
    let (ln, l) = next("variant")?;
    let variant: Variant = keyed(ln, l, "variant")?
        .parse()
        .map_err(|e: crate::error::ModelError| IoError::parse(ln, e.to_string()))?;
    let mut strings = Vec::with_capacity(2);
    for key in ["M", "A"] {
        let (ln, l) = next(key)?;
        let s = ColoredString::from_tokens(keyed(ln, l, key)?)
            .map_err(|e| IoError::parse(ln, e.to_string()))?;
        strings.push(s);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(IoError::parse(ln, "unexpected line after \"A:\""));
    }
    let a = strings.pop().unwrap();
    let m = strings.pop().unwrap();
    Instance::new(variant, m, a).map_err(|e| IoError::Invalid(e.to_string()))
}

fn index_line(key: &str, idx: &[usize]) -> String {
    let mut s = format!("{key}:");
    for i in idx {
        let _ = write!(s, " {i}");
    }
    s.push('\n');
    s
}

pub fn render_solution(sol: &SolutionPair) -> String {
    index_line("IM", &sol.idx_m) + &index_line("IA", &sol.idx_a)
}

/// Indices are read as given; ordering and range are left to the verifier.
/// A file without index lines is the empty solution.
pub fn parse_solution(text: &str) -> Result<SolutionPair, IoError> {
    let mut idx_m = None;
    let mut idx_a = None;
    for (ln, l) in content_lines(text) {
        let (slot, key) = if l.starts_with("IM") {
            (&mut idx_m, "IM")
        } else if l.starts_with("IA") {
            (&mut idx_a, "IA")
        } else {
            return Err(IoError::parse(ln, "expected \"IM:\" or \"IA:\""));
        };
        if slot.is_some() {
            return Err(IoError::parse(ln, format!("duplicate \"{key}:\" line")));
        }
        *slot = Some(numbers(ln, keyed(ln, l, key)?)?);
    }
    Ok(SolutionPair::new(
        idx_m.unwrap_or_default(),
        idx_a.unwrap_or_default(),
    ))
}

pub fn render_graph(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "{u} {v}");
    }
    s
}

pub fn parse_graph(text: &str) -> Result<Graph, IoError> {
    let mut lines = content_lines(text);
    let (ln, head) = lines
        .next()
        .ok_or_else(|| IoError::parse(0, "missing \"n\" line"))?;
    let n = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| IoError::parse(ln, format!("bad vertex count {count:?}")))?,
        _ => return Err(IoError::parse(ln, "expected \"n <count>\"")),
    };
    let mut edges = Vec::new();
    let mut seen = BTreeSet::new();
    for (ln, l) in lines {
        let e: Vec<usize> = numbers(ln, l)?;
        let &[u, v] = e.as_slice() else {
            return Err(IoError::parse(ln, "expected \"<u> <v>\""));
        };
        if !(1 <= u && u < v && v <= n) {
            return Err(IoError::parse(
                ln,
                format!("edge {u} {v} needs 1 <= u < v <= {n}"),
            ));
        }
        if !seen.insert((u, v)) {
            return Err(IoError::parse(ln, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    Graph::new(n, edges).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn render_x3c(x: &X3cInstance) -> String {
    let mut s = format!("q {} m {}\n", x.q(), x.m());
    for [a, b, c] in x.triples() {
        let _ = writeln!(s, "{a} {b} {c}");
    }
    s
}

pub fn parse_x3c(text: &str) -> Result<X3cInstance, IoError> {
    let mut lines = content_lines(text);
    let (ln, head) = lines
        .next()
        .ok_or_else(|| IoError::parse(0, "missing \"q m\" line"))?;
    let (q, m) = match head.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["q", q, "m", m] => match (q.parse::<usize>(), m.parse::<usize>()) {
            (Ok(q), Ok(m)) => (q, m),
            _ => return Err(IoError::parse(ln, "bad q or m")),
        },
        _ => return Err(IoError::parse(ln, "expected \"q <q> m <m>\"")),
    };
    let mut triples = Vec::with_capacity(m);
    let mut last = ln;
    for (ln, l) in lines {
        last = ln;
        let t: Vec<usize> = numbers(ln, l)?;
        let &[a, b, c] = t.as_slice() else {
            return Err(IoError::parse(ln, "expected three elements"));
        };
        if [a, b, c].iter().any(|&e| e == 0 || e > 3 * q) {
            return Err(IoError::parse(
                ln,
                format!("elements must lie in 1..={}", 3 * q),
            ));
        }
        if a == b || a == c || b == c {
            return Err(IoError::parse(ln, "triple repeats an element"));
        }
        triples.push([a, b, c]);
    }
    if triples.len() != m {
        return Err(IoError::parse(
            last,
            format!("header declares {m} triples, found {}", triples.len()),
        ));
    }
    X3cInstance::new(q, triples).map_err(|e| IoError::Invalid(e.to_string()))
}

pub fn render_map(map: &ReductionMap) -> String {
    let mut s = match map.kind {
        ReductionKind::X3c { q, m } => format!("reduction x3c q {q} m {m}\n"),
        ReductionKind::Cohc { n } => format!("reduction cohc n {n}\n"),
    };
    for (side, tags) in [("M", &map.m_tags), ("A", &map.a_tags)] {
        for (p, g) in tags.iter().enumerate() {
            let _ = writeln!(s, "{side} {} {g}", p + 1);
        }
    }
    s
}

pub fn parse_map(text: &str) -> Result<ReductionMap, IoError> {
    let mut lines = content_lines(text);
    let (ln, head) = lines
        .next()
        .ok_or_else(|| IoError::parse(0, "missing \"reduction\" line"))?;
    let words: Vec<&str> = head.split_whitespace().collect();
    let num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| IoError::parse(ln, format!("bad number {s:?}")))
    };
    let kind = match words.as_slice() {
        ["reduction", "x3c", "q", q, "m", m] => ReductionKind::X3c {
            q: num(q)?,
            m: num(m)?,
        },
        ["reduction", "cohc", "n", n] => ReductionKind::Cohc { n: num(n)? },
        _ => {
            return Err(IoError::parse(
                ln,
                "expected \"reduction x3c q Q m M\" or \"reduction cohc n N\"",
            ))
        }
    };
    let mut m_tags = Vec::new();
    let mut a_tags = Vec::new();
    for (ln, l) in lines {
        let words: Vec<&str> = l.split_whitespace().collect();
        let &[side, pos, tag] = words.as_slice() else {
            return Err(IoError::parse(ln, "expected \"<M|A> <pos> <gadget>\""));
        };
        let tags = match side {
            "M" if a_tags.is_empty() => &mut m_tags,
            "A" => &mut a_tags,
            "M" => return Err(IoError::parse(ln, "M records must precede A records")),
            _ => return Err(IoError::parse(ln, format!("unknown side {side:?}"))),
        };
        let pos: usize = pos
            .parse()
            .map_err(|_| IoError::parse(ln, format!("bad position {pos:?}")))?;
        if pos != tags.len() + 1 {
            return Err(IoError::parse(
                ln,
                format!("expected position {}, got {pos}", tags.len() + 1),
            ));
        }
        tags.push(tag.parse::<Gadget>().map_err(|e| IoError::parse(ln, e))?);
    }
    Ok(ReductionMap {
        kind,
        m_tags,
        a_tags,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reduce::{reduce_cohc, reduce_x3c};

    const EXAMPLE2: &str =
        "# example\nvariant: omdci+\nM: a2/1 a1/2 a4/4 a3/3\n\nA: a1/1 a4/4 a2/2 a3/3 a3/4 a4/3\n";

    #[test]
    fn instance_round_trip() {
        let inst = parse_instance(EXAMPLE2).unwrap();
        assert_eq!(inst.variant(), Variant::OmdciPlus);
        assert_eq!(inst.a().len(), 6);
        let text = render_instance(&inst);
        assert_eq!(parse_instance(&text).unwrap(), inst);
        assert_eq!(render_instance(&parse_instance(&text).unwrap()), text);
    }

    #[test]
    fn empty_strings() {
        let inst = parse_instance("variant: general\nM:\nA:\n").unwrap();
        assert!(inst.m().is_empty());
        assert_eq!(render_instance(&inst), "variant: general\nM:\nA:\n");
    }

    #[test]
    fn instance_errors_carry_lines() {
        let bad = "variant: general\nM: a1:1\nA:\n";
        assert!(matches!(
            parse_instance(bad),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("variant: x\nM:\nA:\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_instance("variant: general\nA:\nM:\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_instance("variant: omdci\nM: a/1 a/2\nA:\n"),
            Err(IoError::Invalid(_))
        ));
        assert!(matches!(
            parse_instance(""),
            Err(IoError::Parse { line: 0, .. })
        ));
    }

    #[test]
    fn solution_round_trip() {
        let sol = parse_solution("IM: 1 2 3 4\nIA: 1 3 5 6\n").unwrap();
        assert_eq!(sol, SolutionPair::new(vec![1, 2, 3, 4], vec![1, 3, 5, 6]));
        assert_eq!(render_solution(&sol), "IM: 1 2 3 4\nIA: 1 3 5 6\n");
        assert_eq!(parse_solution("").unwrap(), SolutionPair::default());
        assert_eq!(render_solution(&SolutionPair::default()), "IM:\nIA:\n");
        assert!(matches!(
            parse_solution("IM: 1 x\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_solution("IM: 1\nIM: 2\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn graph_round_trip_and_errors() {
        let g = parse_graph("n 4\n1 2\n# edge\n2 3\n3 4\n1 4\n").unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(parse_graph(&render_graph(&g)).unwrap(), g);
        assert!(matches!(
            parse_graph("n 3\n1 2\n1 2\n"),
            Err(IoError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\n2 1\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("n 3\n1 4\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_graph("vertices 3\n"),
            Err(IoError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn x3c_round_trip_and_errors() {
        let x = parse_x3c("q 2 m 4\n1 3 5\n2 5 6\n2 4 6\n1 2 4\n").unwrap();
        assert_eq!(x.triple(3), [2, 4, 6]);
        assert_eq!(parse_x3c(&render_x3c(&x)).unwrap(), x);
        assert!(matches!(
            parse_x3c("q 1 m 2\n1 2 3\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_x3c("q 1 m 1\n1 2 4\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_x3c("q 1 m 1\n1 2\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn map_round_trip() {
        let x = parse_x3c("q 2 m 4\n1 3 5\n2 5 6\n2 4 6\n1 2 4\n").unwrap();
        let (_, map) = reduce_x3c(&x);
        let text = render_map(&map);
        assert!(text.starts_with("reduction x3c q 2 m 4\nM 1 T_1_1_1\n"));
        assert_eq!(parse_map(&text).unwrap(), map);
        let g = parse_graph("n 3\n1 2\n2 3\n1 3\n").unwrap();
        let (_, map) = reduce_cohc(&g).unwrap();
        assert_eq!(parse_map(&render_map(&map)).unwrap(), map);
        assert!(matches!(
            parse_map("reduction cohc n 3\nM 2 MSelection_1_1\n"),
            Err(IoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_map("reduction cohc n 3\nA 1 ASelection_1_1\nM 1 MSelection_1_1\n"),
            Err(IoError::Parse { line: 3, .. })
        ));
    }
}
