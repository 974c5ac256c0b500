//! Built-in example jobs, stored as spec text.

use crate::spec::{parse_spec, JobSpec};

pub struct Example {
    pub name: &'static str,
    pub summary: &'static str,
    pub text: &'static str,
}

impl Example {
    pub fn spec(&self) -> JobSpec {
        parse_spec(self.text).expect("built-in example parses")
    }
}

const EXAMPLES: &[Example] = &[
    Example {
        name: "example-8.1",
        summary: "shift on N: surjective, not pre-injective",
        text: "\
[semigroup]
family = nat
[alphabet]
size = 2
[automaton]
memory = 1
0 -> 0
1 -> 1
[job]
kind = audit
windows = folner 1..12
",
    },
    Example {
        name: "example-8.1-free-monoid",
        summary: "shift by the generator a on the free monoid of rank 2",
        text: "\
[semigroup]
family = free 2
[alphabet]
size = 2
[automaton]
memory = a
0 -> 0
1 -> 1
[job]
kind = audit
windows = ball 0..3
",
    },
    Example {
        name: "bicyclic",
        summary: "shift by p on the bicyclic monoid: not surjective, pre-injective on the tested supports",
        text: "\
[semigroup]
family = bicyclic
[alphabet]
size = 2
[automaton]
memory = (0,1)
0 -> 0
1 -> 1
[job]
kind = audit
window = (0,0)
window = (0,0) (1,1)
window = (0,0) (1,1) (2,2)
window = (0,0) (1,1) (2,2) (3,3)
window = (0,0) (1,1) (2,2) (3,3) (4,4)
window = (0,0) (1,1) (2,2) (3,3) (4,4) (5,5)
window = (0,0) (1,1) (2,2) (3,3) (4,4) (5,5) (6,6)
window = (0,0) (1,1) (2,2) (3,3) (4,4) (5,5) (6,6) (7,7)
",
    },
    Example {
        name: "z-xor",
        summary: "x(n) + x(n+1) mod 2 on Z",
        text: "\
[semigroup]
family = int 1
[alphabet]
size = 2
[automaton]
memory = 0 1
0 0 -> 0
0 1 -> 1
1 0 -> 1
1 1 -> 0
[job]
kind = audit
windows = anchored 1..10
",
    },
    Example {
        name: "z-xor-entropy",
        summary: "entropy of the image of the XOR rule on Z",
        text: "\
[semigroup]
family = int 1
[alphabet]
size = 2
[automaton]
memory = 0 1
0 0 -> 0
0 1 -> 1
1 0 -> 1
1 1 -> 0
[job]
kind = entropy
source = image
windows = folner 1..6
",
    },
    Example {
        name: "z-and",
        summary: "x(n) * x(n+1) on Z: neither surjective nor pre-injective",
        text: "\
[semigroup]
family = int 1
[alphabet]
size = 2
[automaton]
memory = 0 1
0 0 -> 0
0 1 -> 0
1 0 -> 0
1 1 -> 1
[job]
kind = audit
windows = anchored 1..8
",
    },
    Example {
        name: "z-and-entropy",
        summary: "entropy of the image of the AND rule on Z",
        text: "\
[semigroup]
family = int 1
[alphabet]
size = 2
[automaton]
memory = 0 1
0 0 -> 0
0 1 -> 0
1 0 -> 0
1 1 -> 1
[job]
kind = entropy
source = image
windows = anchored 1..12
",
    },
    Example {
        name: "z-shift",
        summary: "shift on Z",
        text: "\
[semigroup]
family = int 1
[alphabet]
size = 2
[automaton]
memory = 1
0 -> 0
1 -> 1
[job]
kind = audit
windows = anchored 1..8
",
    },
    Example {
        name: "identity",
        summary: "identity on Z",
        text: "\
[semigroup]
family = int 1
[alphabet]
size = 2
[automaton]
memory = 0
0 -> 0
1 -> 1
[job]
kind = audit
windows = anchored 1..8
",
    },
    Example {
        name: "nat-regions",
        summary: "interior, adherence and boundaries of {0..9} for K = {1, 2} on N",
        text: "\
[semigroup]
family = nat
[job]
kind = regions
omega = 0..9
k = 1 2
",
    },
    Example {
        name: "z2-folner",
        summary: "boundary ratios along the Folner boxes of Z^2",
        text: "\
[semigroup]
family = int 2
[job]
kind = folner
n-max = 30
epsilon = 1/20
",
    },
    Example {
        name: "nat-tiling",
        summary: "greedy {0,1}-tiling of N and its density on {0..n-1}",
        text: "\
[semigroup]
family = nat
[job]
kind = tiling
k = 0 1
arena = 0..199
windows = anchored 2..100
",
    },
];

/// Every built-in example, in listing order.
pub fn examples_catalog() -> &'static [Example] {
    EXAMPLES
}

pub fn example(name: &str) -> Option<&'static Example> {
    EXAMPLES.iter().find(|e| e.name == name)
}
