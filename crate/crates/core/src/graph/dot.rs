use std::collections::HashSet;
use std::fmt::Write;

use super::path::check_path;
use super::Graph;
use crate::error::{Error, Result};

/// Graphviz DOT text for `g`. Node ids are the vertex ids; if `labels` is
/// given each node also gets a `label` attribute. Edges of `highlight` are
/// drawn red and bold.
pub fn to_dot(g: &Graph, highlight: Option<&[usize]>, labels: Option<&[String]>) -> Result<String> {
    let mut marked = HashSet::new();
    if let Some(seq) = highlight {
        check_path(g, seq).map_err(|e| Error::InvalidHighlight(e.to_string()))?;
        marked.extend(seq.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))));
    }
    if let Some(labels) = labels {
        if labels.len() != g.n() {
            return Err(Error::SizeMismatch { perm: labels.len(), n: g.n() });
        }
    }
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        match labels {
            Some(l) => writeln!(out, "  {v} [label=\"{}\"];", l[v].replace('"', "\\\"")),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        if marked.contains(&(u, v)) {
            writeln!(out, "  {u} -- {v} [color=red, penwidth=2.5];").unwrap();
        } else {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn plain_triangle() {
        let dot = to_dot(&k3(), None, None).unwrap();
        assert_eq!(dot.matches(" -- ").count(), 3);
        assert_eq!(dot.lines().filter(|l| l.trim_end().ends_with(';') && !l.contains("--")).count(), 3);
        assert!(!dot.contains("color"));
    }

    #[test]
    fn highlighted_edge() {
        let dot = to_dot(&k3(), Some(&[0, 1]), None).unwrap();
        assert!(dot.contains("0 -- 1 [color=red"));
        assert!(dot.contains("1 -- 2;"));
    }

    #[test]
    fn repeated_vertex_rejected() {
        assert!(matches!(
            to_dot(&k3(), Some(&[0, 2, 0]), None),
            Err(Error::InvalidHighlight(_))
        ));
    }
}
