//! File formats: graph6 (bit-exact), plain edge lists, and the textual
//! family-spec grammar used by the CLI.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use std::fmt;

const G6_HEADER: &str = ">>graph6<<";

/// Parses one graph6 line (optional `>>graph6<<` header allowed).
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let data = line.strip_prefix(G6_HEADER).unwrap_or(line).as_bytes();
    if data.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    let value = |b: u8| -> Result<u64> {
        if (63..=126).contains(&b) {
            Ok(u64::from(b) - 63)
        } else {
            Err(Error::Graph6(format!("byte {b} outside the printable range 63..=126")))
        }
    };
    let (n, mut pos) = if data[0] == 126 {
        if data.len() >= 2 && data[1] == 126 {
            if data.len() < 8 {
                return Err(Error::Graph6("truncated 8-byte order field".into()));
            }
            let mut n = 0u64;
            for &b in &data[2..8] {
                n = n << 6 | value(b)?;
            }
            (n, 8)
        } else {
            if data.len() < 4 {
                return Err(Error::Graph6("truncated 4-byte order field".into()));
            }
            let mut n = 0u64;
            for &b in &data[1..4] {
                n = n << 6 | value(b)?;
            }
            (n, 4)
        }
    } else {
        (value(data[0])?, 1)
    };
    if n as usize > MAX_VERTICES {
        return Err(Error::Graph6(format!("n = {n} exceeds the vertex cap {MAX_VERTICES}")));
    }
    let n = n as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if data.len() - pos < nbytes {
        return Err(Error::Graph6(format!(
            "truncated payload: need {nbytes} bytes, found {}",
            data.len() - pos
        )));
    }
    if data.len() - pos > nbytes {
        return Err(Error::Graph6("trailing bytes after payload".into()));
    }
    let mut edges = Vec::new();
    let mut cur = 0u64;
    let mut have = 0usize;
    for j in 1..n {
        for i in 0..j {
            if have == 0 {
                cur = value(data[pos])?;
                pos += 1;
                have = 6;
            }
            have -= 1;
            if cur >> have & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    if have > 0 && cur & ((1 << have) - 1) != 0 {
        return Err(Error::Graph6("nonzero padding bits".into()));
    }
    Graph::from_edge_list(n, &edges)
}

/// Writes the canonical (shortest-form, zero-padded) graph6 encoding.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut bytes: Vec<u8> = Vec::new();
    if n <= 62 {
        bytes.push(63 + n as u8);
    } else {
        // 4-byte form covers everything up to the vertex cap
        bytes.push(126);
        bytes.push(63 + ((n >> 12) & 63) as u8);
        bytes.push(63 + ((n >> 6) & 63) as u8);
        bytes.push(63 + (n & 63) as u8);
    }
    let mut cur = 0u8;
    let mut have = 0usize;
    for j in 1..n {
        for i in 0..j {
            cur <<= 1;
            if g.has_edge(i, j) {
                cur |= 1;
            }
            have += 1;
            if have == 6 {
                bytes.push(63 + cur);
                cur = 0;
                have = 0;
            }
        }
    }
    if have > 0 {
        bytes.push(63 + (cur << (6 - have)));
    }
    String::from_utf8(bytes).expect("printable bytes")
}

/// Parses a stream of graph6 lines (blank lines skipped), as produced by
/// `enumerate` or external generators.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    text.lines().filter(|l| !l.trim().is_empty()).map(parse_graph6).collect()
}

/// Parses the edge-list format: first line `n <count>`, then one `u v`
/// pair per line (0-based).
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines
        .next()
        .ok_or_else(|| Error::EdgeList("missing `n <count>` header".into()))?;
    let mut parts = header.split_whitespace();
    if parts.next() != Some("n") {
        return Err(Error::EdgeList(format!("expected `n <count>` header, found `{header}`")));
    }
    let n: usize = parts
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeList(format!("bad vertex count in `{header}`")))?;
    if parts.next().is_some() {
        return Err(Error::EdgeList(format!("trailing tokens in header `{header}`")));
    }
    let mut edges = Vec::new();
    for (idx, line) in lines {
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(Error::EdgeList(format!("line {}: expected `u v`", idx + 1))),
        };
        let parse = |t: &str| -> Result<usize> {
            t.parse().map_err(|_| Error::EdgeList(format!("line {}: bad vertex `{t}`", idx + 1)))
        };
        edges.push((parse(u)?, parse(v)?));
    }
    Graph::from_edge_list(n, &edges)
}

/// Canonical edge-list rendering: sorted pairs, one per line.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Symbolic description of a constructed graph, as accepted by the CLI
/// grammar: `name(args)` with integer arguments, nested specs, an optional
/// `@anchor` suffix on graph arguments, and `k=<int>` for the h3 scale.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FamilySpec {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    Corona(Box<FamilySpec>),
    DisjointUnion(Vec<FamilySpec>),
    ZykovSum(Box<FamilySpec>, Box<FamilySpec>),
    Join(Vec<(FamilySpec, usize)>),
    LChain(usize),
    WStar(usize),
    Lemma4G1 { nu: usize, q: usize },
    ChainProduct(Vec<usize>),
    CycleWithTail(usize),
    H1 { base: Box<FamilySpec>, anchor: usize },
    H2 { base: Box<FamilySpec>, anchor: usize },
    H3 { bases: Vec<(FamilySpec, usize)>, k: usize },
    Fig22G,
    PrimeFactor(u64),
}

impl FamilySpec {
    /// Materializes the described graph.
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Path(n) => Graph::path(*n),
            FamilySpec::Cycle(n) => Graph::cycle(*n),
            FamilySpec::Complete(n) => Graph::complete(*n),
            FamilySpec::Star(q) => Graph::star(*q),
            FamilySpec::Corona(b) => families::corona_k1(&b.build()?),
            FamilySpec::DisjointUnion(children) => {
                let gs: Vec<Graph> = children.iter().map(|c| c.build()).collect::<Result<_>>()?;
                families::disjoint_union(&gs)
            }
            FamilySpec::ZykovSum(a, b) => families::zykov_sum(&a.build()?, &b.build()?),
            FamilySpec::Join(children) => {
                let gs: Vec<(Graph, usize)> = children
                    .iter()
                    .map(|(c, a)| c.build().map(|g| (g, *a)))
                    .collect::<Result<_>>()?;
                families::join_vertex(&gs)
            }
            FamilySpec::LChain(s) => families::l_chain(*s),
            FamilySpec::WStar(q) => families::w_star(*q),
            FamilySpec::Lemma4G1 { nu, q } => families::lemma4_g1(*nu, *q),
            FamilySpec::ChainProduct(ss) => families::chain_product(ss),
            FamilySpec::CycleWithTail(n) => families::cycle_with_tail(*n),
            FamilySpec::H1 { base, anchor } => families::transform_h1(&base.build()?, *anchor),
            FamilySpec::H2 { base, anchor } => families::transform_h2(&base.build()?, *anchor),
            FamilySpec::H3 { bases, k } => {
                let gs: Vec<(Graph, usize)> = bases
                    .iter()
                    .map(|(c, a)| c.build().map(|g| (g, *a)))
                    .collect::<Result<_>>()?;
                families::transform_h3_multi(&gs, *k)
            }
            FamilySpec::Fig22G => Ok(families::fig22_g()),
            FamilySpec::PrimeFactor(q) => {
                if *q < 2 {
                    return Err(Error::ParamOutOfRange {
                        op: "primefactor",
                        msg: "q >= 2 required".into(),
                    });
                }
                let mut attach = Vec::new();
                for (p, e) in factorize(*q) {
                    attach.extend(std::iter::repeat_n(p as usize - 1, e as usize));
                }
                families::chain_product(&attach)
            }
        }
    }
}

/// Prime factorization by trial division, `(prime, exponent)` pairs.
pub fn factorize(mut q: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= q {
        if q.is_multiple_of(d) {
            let mut e = 0;
            while q.is_multiple_of(d) {
                q /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if q > 1 {
        out.push((q, 1));
    }
    out
}

fn fmt_anchored(f: &mut fmt::Formatter<'_>, spec: &FamilySpec, anchor: usize) -> fmt::Result {
    write!(f, "{spec}")?;
    if anchor != 0 {
        write!(f, "@{anchor}")?;
    }
    Ok(())
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Path(n) => write!(f, "path({n})"),
            FamilySpec::Cycle(n) => write!(f, "cycle({n})"),
            FamilySpec::Complete(n) => write!(f, "complete({n})"),
            FamilySpec::Star(q) => write!(f, "star({q})"),
            FamilySpec::Corona(b) => write!(f, "corona({b})"),
            FamilySpec::DisjointUnion(children) => {
                write!(f, "union(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{c}")?;
                }
                write!(f, ")")
            }
            FamilySpec::ZykovSum(a, b) => write!(f, "zykov({a}, {b})"),
            FamilySpec::Join(children) => {
                write!(f, "join(")?;
                for (i, (c, a)) in children.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    fmt_anchored(f, c, *a)?;
                }
                write!(f, ")")
            }
            FamilySpec::LChain(s) => write!(f, "lchain({s})"),
            FamilySpec::WStar(q) => write!(f, "wstar({q})"),
            FamilySpec::Lemma4G1 { nu, q } => write!(f, "lemma4g1({nu}, {q})"),
            FamilySpec::ChainProduct(ss) => {
                write!(f, "chainprod(")?;
                for (i, s) in ss.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{s}")?;
                }
                write!(f, ")")
            }
            FamilySpec::CycleWithTail(n) => write!(f, "cycletail({n})"),
            FamilySpec::H1 { base, anchor } => {
                write!(f, "h1(")?;
                fmt_anchored(f, base, *anchor)?;
                write!(f, ")")
            }
            FamilySpec::H2 { base, anchor } => {
                write!(f, "h2(")?;
                fmt_anchored(f, base, *anchor)?;
                write!(f, ")")
            }
            FamilySpec::H3 { bases, k } => {
                write!(f, "h3(")?;
                for (c, a) in bases.iter() {
                    fmt_anchored(f, c, *a)?;
                    write!(f, ", ")?;
                }
                write!(f, "k={k})")
            }
            FamilySpec::Fig22G => write!(f, "fig22g()"),
            FamilySpec::PrimeFactor(q) => write!(f, "primefactor({q})"),
        }
    }
}

impl std::str::FromStr for FamilySpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<FamilySpec> {
        parse_family_spec(s)
    }
}

/// Parses the family-spec grammar, reporting the byte position on error.
pub fn parse_family_spec(text: &str) -> Result<FamilySpec> {
    let mut p = Parser { text: text.as_bytes(), pos: 0 };
    let spec = p.spec()?;
    p.skip_ws();
    if p.pos != p.text.len() {
        return Err(p.err("trailing input"));
    }
    Ok(spec)
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

/// Argument forms a spec name can receive.
enum Arg {
    Int(u64),
    Spec(FamilySpec, usize),
    K(u64),
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        Error::FamilySpec { pos: self.pos, msg: msg.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", b as char)))
        }
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len()
            && (self.text[self.pos].is_ascii_lowercase() || self.text[self.pos].is_ascii_digit())
        {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a name"));
        }
        Ok(String::from_utf8(self.text[start..self.pos].to_vec()).expect("ascii"))
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .expect("digits")
            .parse()
            .map_err(|_| self.err("integer too large"))
    }

    fn spec(&mut self) -> Result<FamilySpec> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident()?;
        // a leading identifier that is all digits is a misplaced integer
        if name.bytes().all(|b| b.is_ascii_digit()) {
            self.pos = at;
            return Err(self.err("expected a family name, found an integer"));
        }
        let mut args = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.eat(b'(')?;
            self.skip_ws();
            if self.peek() != Some(b')') {
                loop {
                    args.push(self.arg()?);
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                        }
                        Some(b')') => break,
                        _ => return Err(self.err("expected `,` or `)`")),
                    }
                }
            }
            self.eat(b')')?;
        }
        self.assemble(at, &name, args)
    }

    fn arg(&mut self) -> Result<Arg> {
        self.skip_ws();
        match self.peek() {
            Some(b) if b.is_ascii_digit() => Ok(Arg::Int(self.int()?)),
            Some(b'k') if self.lookahead_keq() => {
                self.ident()?;
                self.skip_ws();
                self.eat(b'=')?;
                Ok(Arg::K(self.int()?))
            }
            _ => {
                let spec = self.spec()?;
                self.skip_ws();
                let anchor = if self.peek() == Some(b'@') {
                    self.pos += 1;
                    self.int()? as usize
                } else {
                    0
                };
                Ok(Arg::Spec(spec, anchor))
            }
        }
    }

    /// True when the input at the cursor is exactly `k =` (not a name like
    /// `k3something`).
    fn lookahead_keq(&self) -> bool {
        let mut i = self.pos + 1;
        while i < self.text.len() && self.text[i].is_ascii_whitespace() {
            i += 1;
        }
        self.text.get(i) == Some(&b'=')
    }

    fn assemble(&self, at: usize, name: &str, args: Vec<Arg>) -> Result<FamilySpec> {
        let fail = |msg: &str| -> Error { Error::FamilySpec { pos: at, msg: msg.into() } };
        let ints = |args: &[Arg]| -> Result<Vec<u64>> {
            args.iter()
                .map(|a| match a {
                    Arg::Int(v) => Ok(*v),
                    _ => Err(fail("expected integer arguments")),
                })
                .collect()
        };
        let one_int = |args: &[Arg]| -> Result<usize> {
            match ints(args)?.as_slice() {
                [v] => Ok(*v as usize),
                _ => Err(fail("expected exactly one integer argument")),
            }
        };
        let anchored = |args: Vec<Arg>| -> Result<Vec<(FamilySpec, usize)>> {
            args.into_iter()
                .map(|a| match a {
                    Arg::Spec(s, anchor) => Ok((s, anchor)),
                    _ => Err(fail("expected graph arguments")),
                })
                .collect()
        };
        match name {
            "path" => Ok(FamilySpec::Path(one_int(&args)?)),
            "cycle" => Ok(FamilySpec::Cycle(one_int(&args)?)),
            "complete" => Ok(FamilySpec::Complete(one_int(&args)?)),
            "star" => Ok(FamilySpec::Star(one_int(&args)?)),
            "lchain" => Ok(FamilySpec::LChain(one_int(&args)?)),
            "wstar" => Ok(FamilySpec::WStar(one_int(&args)?)),
            "cycletail" => Ok(FamilySpec::CycleWithTail(one_int(&args)?)),
            "primefactor" => Ok(FamilySpec::PrimeFactor(one_int(&args)? as u64)),
            "lemma4g1" => match ints(&args)?.as_slice() {
                [nu, q] => Ok(FamilySpec::Lemma4G1 { nu: *nu as usize, q: *q as usize }),
                _ => Err(fail("lemma4g1 expects (nu, q)")),
            },
            "chainprod" => {
                let ss = ints(&args)?;
                if ss.is_empty() {
                    return Err(fail("chainprod expects at least one chain length"));
                }
                Ok(FamilySpec::ChainProduct(ss.into_iter().map(|v| v as usize).collect()))
            }
            "corona" => match anchored(args)?.as_mut_slice() {
                [(s, 0)] => Ok(FamilySpec::Corona(Box::new(s.clone()))),
                _ => Err(fail("corona expects one graph argument without anchor")),
            },
            "union" => {
                let children = anchored(args)?;
                if children.is_empty() {
                    return Err(fail("union expects at least one graph"));
                }
                if children.iter().any(|(_, a)| *a != 0) {
                    return Err(fail("union takes no anchors"));
                }
                Ok(FamilySpec::DisjointUnion(children.into_iter().map(|(s, _)| s).collect()))
            }
            "zykov" => match anchored(args)?.as_mut_slice() {
                [(a, 0), (b, 0)] => {
                    Ok(FamilySpec::ZykovSum(Box::new(a.clone()), Box::new(b.clone())))
                }
                _ => Err(fail("zykov expects two graph arguments without anchors")),
            },
            "join" => {
                let children = anchored(args)?;
                if children.len() < 2 {
                    return Err(fail("join expects at least two anchored graphs"));
                }
                Ok(FamilySpec::Join(children))
            }
            "h1" | "h2" => match anchored(args)?.as_mut_slice() {
                [(s, a)] => {
                    let base = Box::new(s.clone());
                    Ok(if name == "h1" {
                        FamilySpec::H1 { base, anchor: *a }
                    } else {
                        FamilySpec::H2 { base, anchor: *a }
                    })
                }
                _ => Err(fail("expected one anchored graph argument")),
            },
            "h3" => {
                let mut k = None;
                let mut bases = Vec::new();
                for a in args {
                    match a {
                        Arg::K(v) => {
                            if k.replace(v as usize).is_some() {
                                return Err(fail("duplicate k="));
                            }
                        }
                        Arg::Spec(s, anchor) => bases.push((s, anchor)),
                        Arg::Int(_) => return Err(fail("h3 expects graphs and k=<int>")),
                    }
                }
                let k = k.ok_or_else(|| fail("h3 requires k=<int>"))?;
                if bases.is_empty() {
                    return Err(fail("h3 expects at least one anchored graph"));
                }
                Ok(FamilySpec::H3 { bases, k })
            }
            "fig22g" => {
                if args.is_empty() {
                    Ok(FamilySpec::Fig22G)
                } else {
                    Err(fail("fig22g takes no arguments"))
                }
            }
            _ => Err(fail(&format!("unknown family name `{name}`"))),
        }
    }
}
