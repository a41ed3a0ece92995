//! Structured events emitted while the edge-colouring engine mutates a
//! colouring. Colours are printed 1-based, matching the file formats.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceEvent {
    /// A new edge enters the colouring run.
    Insert { edge: usize },
    /// An uncoloured edge receives a colour.
    Assign { edge: usize, colour: usize },
    /// Fan rotation: `edges[i]` now carries `colours[i]`; `freed` is left
    /// uncoloured.
    Rotate {
        hinge: usize,
        edges: Vec<usize>,
        colours: Vec<usize>,
        freed: usize,
    },
    /// Two-colour component exchange.
    KempeSwap {
        alpha: usize,
        beta: usize,
        edges: Vec<usize>,
    },
    /// One fan-chain step: `coloured` takes `colour`, `freed` is uncoloured.
    ChainStep {
        coloured: usize,
        freed: usize,
        colour: usize,
    },
    /// The fan chain closed into an odd cycle of this length.
    CycleClosed { length: usize },
    /// Colours of two edges exchanged.
    EdgeSwap { edges: (usize, usize), colours: (usize, usize) },
}

fn list(f: &mut fmt::Formatter<'_>, xs: &[usize], shift: usize) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{}", x + shift)?;
    }
    Ok(())
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceEvent::Insert { edge } => write!(f, "insert edge={edge}"),
            TraceEvent::Assign { edge, colour } => {
                write!(f, "assign edge={edge} colour={}", colour + 1)
            }
            TraceEvent::Rotate {
                hinge,
                edges,
                colours,
                freed,
            } => {
                write!(f, "rotate hinge={hinge} edges=")?;
                list(f, edges, 0)?;
                f.write_str(" colours=")?;
                list(f, colours, 1)?;
                write!(f, " freed={freed}")
            }
            TraceEvent::KempeSwap { alpha, beta, edges } => {
                write!(f, "kempe alpha={} beta={} edges=", alpha + 1, beta + 1)?;
                list(f, edges, 0)
            }
            TraceEvent::ChainStep {
                coloured,
                freed,
                colour,
            } => write!(
                f,
                "chain coloured={coloured} colour={} freed={freed}",
                colour + 1
            ),
            TraceEvent::CycleClosed { length } => write!(f, "cycle length={length}"),
            TraceEvent::EdgeSwap { edges, colours } => write!(
                f,
                "swap edges={},{} colours={},{}",
                edges.0,
                edges.1,
                colours.0 + 1,
                colours.1 + 1
            ),
        }
    }
}

/// Optional event sink. Events are only built when a sink is attached.
#[derive(Default)]
pub struct Tracer<'a> {
    sink: Option<&'a mut dyn FnMut(&TraceEvent)>,
}

impl<'a> Tracer<'a> {
    pub fn new(sink: &'a mut dyn FnMut(&TraceEvent)) -> Self {
        Tracer { sink: Some(sink) }
    }

    pub fn off() -> Self {
        Tracer { sink: None }
    }

    #[inline]
    pub fn emit(&mut self, event: impl FnOnce() -> TraceEvent) {
        if let Some(sink) = self.sink.as_mut() {
            sink(&event());
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn records_are_one_based_in_colours() {
        let e = TraceEvent::Rotate {
            hinge: 2,
            edges: vec![0, 3],
            colours: vec![0, 4],
            freed: 5,
        };
        assert_eq!(e.to_string(), "rotate hinge=2 edges=0,3 colours=1,5 freed=5");
        let e = TraceEvent::KempeSwap {
            alpha: 0,
            beta: 1,
            edges: vec![7],
        };
        assert_eq!(e.to_string(), "kempe alpha=1 beta=2 edges=7");
    }

    #[test]
    fn disabled_tracer_skips_construction() {
        let mut t = Tracer::off();
        t.emit(|| panic!("must not be built"));
    }
}
