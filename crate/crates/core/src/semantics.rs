//! Labelled-transition semantics for the five data structures: pool,
//! pool with membership, queue, stack, and register bank.
//!
//! A data structure is modelled as a deterministic labelled transition
//! system whose labels are completed method applications ([`Event`]s). A
//! [`Behavior`] is a duplicate-free sequence of events; it is *valid* when
//! it is a trace of the structure's LTS starting from [`initial_state`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A runtime value: a natural number or the distinguished `NULL`.
///
/// `NULL` is returned by `take`/`deq`/`pop` on an empty structure; it is
/// never a stored element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Nat(u64),
    Null,
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Nat(n) => write!(f, "{n}"),
            Value::Null => write!(f, "NULL"),
        }
    }
}

/// The five supported data structures.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DataStructureKind {
    Pool,
    PoolMem,
    Queue,
    Stack,
    Register,
}

impl DataStructureKind {
    pub const ALL: [DataStructureKind; 5] = [
        DataStructureKind::Pool,
        DataStructureKind::PoolMem,
        DataStructureKind::Queue,
        DataStructureKind::Stack,
        DataStructureKind::Register,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            DataStructureKind::Pool => "pool",
            DataStructureKind::PoolMem => "poolmem",
            DataStructureKind::Queue => "queue",
            DataStructureKind::Stack => "stack",
            DataStructureKind::Register => "register",
        }
    }

    /// Whether `method` belongs to this structure's method alphabet.
    pub fn alphabet_contains(&self, method: &Method) -> bool {
        matches!(
            (self, method),
            (DataStructureKind::Pool, Method::Put | Method::Take)
                | (DataStructureKind::PoolMem, Method::Put | Method::Take | Method::Mem)
                | (DataStructureKind::Queue, Method::Enq | Method::Deq)
                | (DataStructureKind::Stack, Method::Push | Method::Pop)
                | (DataStructureKind::Register, Method::Write(_) | Method::Read(_))
        )
    }
}

impl fmt::Display for DataStructureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DataStructureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "pool" => Ok(DataStructureKind::Pool),
            "poolmem" => Ok(DataStructureKind::PoolMem),
            "queue" => Ok(DataStructureKind::Queue),
            "stack" => Ok(DataStructureKind::Stack),
            "register" => Ok(DataStructureKind::Register),
            other => Err(format!("unknown data structure kind `{other}`")),
        }
    }
}

/// A method name. Register methods are indexed per register cell, so the
/// index is part of the name (`wr3`, `rd3`), not an argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    Put,
    Take,
    Mem,
    Enq,
    Deq,
    Push,
    Pop,
    Write(u64),
    Read(u64),
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Method::Put => write!(f, "put"),
            Method::Take => write!(f, "take"),
            Method::Mem => write!(f, "mem"),
            Method::Enq => write!(f, "enq"),
            Method::Deq => write!(f, "deq"),
            Method::Push => write!(f, "push"),
            Method::Pop => write!(f, "pop"),
            Method::Write(i) => write!(f, "wr{i}"),
            Method::Read(i) => write!(f, "rd{i}"),
        }
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "put" => return Ok(Method::Put),
            "take" => return Ok(Method::Take),
            "mem" => return Ok(Method::Mem),
            "enq" => return Ok(Method::Enq),
            "deq" => return Ok(Method::Deq),
            "push" => return Ok(Method::Push),
            "pop" => return Ok(Method::Pop),
            _ => {}
        }
        if let Some(idx) = s.strip_prefix("wr") {
            if let Ok(i) = idx.parse() {
                return Ok(Method::Write(i));
            }
        }
        if let Some(idx) = s.strip_prefix("rd") {
            if let Ok(i) = idx.parse() {
                return Ok(Method::Read(i));
            }
        }
        Err(format!("unknown method `{s}`"))
    }
}

/// One completed method application: identifier, method, input argument and
/// output value. Unused argument slots are `None`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Event {
    pub id: u64,
    pub method: Method,
    pub input: Option<Value>,
    pub output: Option<Value>,
}

impl Event {
    pub fn new(id: u64, method: Method, input: Option<Value>, output: Option<Value>) -> Self {
        Event { id, method, input, output }
    }

    pub fn put(id: u64, x: u64) -> Self {
        Event::new(id, Method::Put, Some(Value::Nat(x)), None)
    }

    /// `take(x)` for `Some(x)`, `take(NULL)` for `None`.
    pub fn take(id: u64, x: Option<u64>) -> Self {
        Event::new(id, Method::Take, None, Some(x.map_or(Value::Null, Value::Nat)))
    }

    pub fn mem(id: u64, x: u64, y: u64) -> Self {
        Event::new(id, Method::Mem, Some(Value::Nat(x)), Some(Value::Nat(y)))
    }

    pub fn enq(id: u64, x: u64) -> Self {
        Event::new(id, Method::Enq, Some(Value::Nat(x)), None)
    }

    pub fn deq(id: u64, x: Option<u64>) -> Self {
        Event::new(id, Method::Deq, None, Some(x.map_or(Value::Null, Value::Nat)))
    }

    pub fn push(id: u64, x: u64) -> Self {
        Event::new(id, Method::Push, Some(Value::Nat(x)), None)
    }

    pub fn pop(id: u64, x: Option<u64>) -> Self {
        Event::new(id, Method::Pop, None, Some(x.map_or(Value::Null, Value::Nat)))
    }

    /// `wr_i(x)`.
    pub fn write(id: u64, reg: u64, x: u64) -> Self {
        Event::new(id, Method::Write(reg), Some(Value::Nat(x)), None)
    }

    /// `rd_i(x)`.
    pub fn read(id: u64, reg: u64, x: u64) -> Self {
        Event::new(id, Method::Read(reg), None, Some(Value::Nat(x)))
    }
}

impl fmt::Display for Event {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.input, self.output) {
            (Some(i), Some(o)) => write!(f, "{}({i},{o})", self.method),
            (Some(i), None) => write!(f, "{}({i})", self.method),
            (None, Some(o)) => write!(f, "{}({o})", self.method),
            (None, None) => write!(f, "{}()", self.method),
        }
    }
}

/// The state of a data structure: a set for pools, a sequence for queues
/// and stacks, a sparse map for register banks.
///
/// Register entries never map to 0; an absent index reads as 0, so the
/// all-zero initial state is the empty map and state equality is canonical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum DsState {
    Set(BTreeSet<u64>),
    /// Queue front / stack bottom is index 0.
    Seq(Vec<u64>),
    Map(BTreeMap<u64, u64>),
}

/// The initial state: empty set, empty sequence, or all-zero register bank.
pub fn initial_state(kind: DataStructureKind) -> DsState {
    match kind {
        DataStructureKind::Pool | DataStructureKind::PoolMem => DsState::Set(BTreeSet::new()),
        DataStructureKind::Queue | DataStructureKind::Stack => DsState::Seq(Vec::new()),
        DataStructureKind::Register => DsState::Map(BTreeMap::new()),
    }
}

/// The event is not a legal transition from the given state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("event is not enabled in the current state")]
pub struct NotEnabled;

/// Applies one event to a state, returning the unique successor state, or
/// [`NotEnabled`] when the labelled transition does not exist. Events whose
/// method is outside the kind's alphabet are never enabled.
///
/// Panics if `state` is not a state of `kind` (wrong variant).
pub fn step(kind: DataStructureKind, state: &DsState, event: &Event) -> Result<DsState, NotEnabled> {
    match kind {
        DataStructureKind::Pool | DataStructureKind::PoolMem => {
            let q = match state {
                DsState::Set(q) => q,
                _ => panic!("state does not belong to a {kind}"),
            };
            match (&event.method, event.input, event.output) {
                (Method::Put, Some(Value::Nat(x)), None) => {
                    let mut q = q.clone();
                    q.insert(x);
                    Ok(DsState::Set(q))
                }
                (Method::Take, None, Some(Value::Nat(x))) if q.contains(&x) => {
                    let mut q = q.clone();
                    q.remove(&x);
                    Ok(DsState::Set(q))
                }
                (Method::Take, None, Some(Value::Null)) if q.is_empty() => Ok(state.clone()),
                (Method::Mem, Some(Value::Nat(x)), Some(Value::Nat(y)))
                    if kind == DataStructureKind::PoolMem =>
                {
                    // y = x reports presence, y = x + 1 reports absence.
                    let enabled = (y == x && q.contains(&x)) || (y == x + 1 && !q.contains(&x));
                    if enabled {
                        Ok(state.clone())
                    } else {
                        Err(NotEnabled)
                    }
                }
                _ => Err(NotEnabled),
            }
        }
        DataStructureKind::Queue => {
            let q = match state {
                DsState::Seq(q) => q,
                _ => panic!("state does not belong to a {kind}"),
            };
            match (&event.method, event.input, event.output) {
                (Method::Enq, Some(Value::Nat(x)), None) => {
                    let mut q = q.clone();
                    q.push(x);
                    Ok(DsState::Seq(q))
                }
                (Method::Deq, None, Some(Value::Nat(x))) if q.first() == Some(&x) => {
                    Ok(DsState::Seq(q[1..].to_vec()))
                }
                (Method::Deq, None, Some(Value::Null)) if q.is_empty() => Ok(state.clone()),
                _ => Err(NotEnabled),
            }
        }
        DataStructureKind::Stack => {
            let q = match state {
                DsState::Seq(q) => q,
                _ => panic!("state does not belong to a {kind}"),
            };
            match (&event.method, event.input, event.output) {
                (Method::Push, Some(Value::Nat(x)), None) => {
                    let mut q = q.clone();
                    q.push(x);
                    Ok(DsState::Seq(q))
                }
                (Method::Pop, None, Some(Value::Nat(x))) if q.last() == Some(&x) => {
                    Ok(DsState::Seq(q[..q.len() - 1].to_vec()))
                }
                (Method::Pop, None, Some(Value::Null)) if q.is_empty() => Ok(state.clone()),
                _ => Err(NotEnabled),
            }
        }
        DataStructureKind::Register => {
            let q = match state {
                DsState::Map(q) => q,
                _ => panic!("state does not belong to a {kind}"),
            };
            match (&event.method, event.input, event.output) {
                (Method::Write(i), Some(Value::Nat(x)), None) => {
                    let mut q = q.clone();
                    if x == 0 {
                        q.remove(i);
                    } else {
                        q.insert(*i, x);
                    }
                    Ok(DsState::Map(q))
                }
                (Method::Read(i), None, Some(Value::Nat(x)))
                    if q.get(i).copied().unwrap_or(0) == x =>
                {
                    Ok(state.clone())
                }
                _ => Err(NotEnabled),
            }
        }
    }
}

/// Two events in one behavior share an id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("duplicate event id {0}")]
pub struct DuplicateEventId(pub u64);

/// The behavior is not executable: the event at this index is not enabled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("behavior is invalid at index {0}")]
pub struct InvalidAt(pub usize);

/// A duplicate-free sequence of events.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Behavior {
    events: Vec<Event>,
}

impl Behavior {
    pub fn empty() -> Self {
        Behavior { events: Vec::new() }
    }

    /// Builds a behavior, rejecting duplicate event ids.
    pub fn from_events(events: Vec<Event>) -> Result<Self, DuplicateEventId> {
        let mut seen = BTreeSet::new();
        for e in &events {
            if !seen.insert(e.id) {
                return Err(DuplicateEventId(e.id));
            }
        }
        Ok(Behavior { events })
    }

    pub fn events(&self) -> &[Event] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Event> {
        self.events.iter()
    }

    /// Concatenation of segments with pairwise-distinct ids.
    pub fn concat(segments: &[&Behavior]) -> Result<Self, DuplicateEventId> {
        let mut events = Vec::new();
        for s in segments {
            events.extend(s.events.iter().cloned());
        }
        Behavior::from_events(events)
    }

    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> Behavior {
        Behavior { events: self.events[range].to_vec() }
    }
}

impl fmt::Display for Behavior {
    /// Compact rendering without event ids, e.g. `enq(1)·deq(1)`; the empty
    /// behavior renders as `ε`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.events.is_empty() {
            return write!(f, "ε");
        }
        for (i, e) in self.events.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// Folds [`step`] over the behavior from `start`, returning the final state
/// or the index of the first event that is not enabled.
pub fn run_behavior(
    kind: DataStructureKind,
    start: &DsState,
    behavior: &Behavior,
) -> Result<DsState, InvalidAt> {
    let mut state = start.clone();
    for (i, event) in behavior.iter().enumerate() {
        state = step(kind, &state, event).map_err(|_| InvalidAt(i))?;
    }
    Ok(state)
}

/// Whether the behavior is a trace of the kind's LTS from the initial state.
pub fn is_valid_behavior(kind: DataStructureKind, behavior: &Behavior) -> bool {
    run_behavior(kind, &initial_state(kind), behavior).is_ok()
}

/// A line-oriented text format failed to parse.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based line number.
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError { line, message: message.into() }
    }
}

fn format_slot(v: Option<Value>) -> String {
    match v {
        None => "-".to_string(),
        Some(v) => v.to_string(),
    }
}

fn parse_slot(s: &str, line: usize) -> Result<Option<Value>, ParseError> {
    match s {
        "-" => Ok(None),
        "NULL" => Ok(Some(Value::Null)),
        n => n
            .parse()
            .map(|n| Some(Value::Nat(n)))
            .map_err(|_| ParseError::new(line, format!("expected a natural, `NULL`, or `-`, got `{n}`"))),
    }
}

/// Serializes a behavior as one `id method input output` record per line,
/// with `-` for an absent slot and `NULL` for the null value.
pub fn format_behavior(behavior: &Behavior) -> String {
    let mut out = String::new();
    for e in behavior.iter() {
        out.push_str(&format!(
            "{} {} {} {}\n",
            e.id,
            e.method,
            format_slot(e.input),
            format_slot(e.output)
        ));
    }
    out
}

/// Parses the format written by [`format_behavior`]. Blank lines are
/// ignored; anything else must be a four-field record.
pub fn parse_behavior(text: &str) -> Result<Behavior, ParseError> {
    let mut events = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if fields.len() != 4 {
            return Err(ParseError::new(
                line,
                format!("expected `id method input output`, got {} fields", fields.len()),
            ));
        }
        let id = fields[0]
            .parse()
            .map_err(|_| ParseError::new(line, format!("bad event id `{}`", fields[0])))?;
        let method = fields[1]
            .parse()
            .map_err(|e| ParseError::new(line, e))?;
        let input = parse_slot(fields[2], line)?;
        let output = parse_slot(fields[3], line)?;
        events.push(Event::new(id, method, input, output));
    }
    Behavior::from_events(events).map_err(|e| ParseError::new(0, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(xs: &[u64]) -> DsState {
        DsState::Set(xs.iter().copied().collect())
    }

    fn seq(xs: &[u64]) -> DsState {
        DsState::Seq(xs.to_vec())
    }

    #[test]
    fn initial_states() {
        assert_eq!(initial_state(DataStructureKind::Pool), set(&[]));
        assert_eq!(initial_state(DataStructureKind::PoolMem), set(&[]));
        assert_eq!(initial_state(DataStructureKind::Queue), seq(&[]));
        assert_eq!(initial_state(DataStructureKind::Stack), seq(&[]));
        assert_eq!(initial_state(DataStructureKind::Register), DsState::Map(BTreeMap::new()));
    }

    #[test]
    fn pool_put_take() {
        let kind = DataStructureKind::Pool;
        assert_eq!(step(kind, &set(&[]), &Event::put(1, 5)), Ok(set(&[5])));
        // put of a present element leaves the set unchanged
        assert_eq!(step(kind, &set(&[5]), &Event::put(1, 5)), Ok(set(&[5])));
        assert_eq!(step(kind, &set(&[3, 5]), &Event::take(1, Some(5))), Ok(set(&[3])));
        assert_eq!(step(kind, &set(&[3]), &Event::take(1, Some(5))), Err(NotEnabled));
        assert_eq!(step(kind, &set(&[]), &Event::take(1, None)), Ok(set(&[])));
        assert_eq!(step(kind, &set(&[3]), &Event::take(1, None)), Err(NotEnabled));
    }

    #[test]
    fn poolmem_membership_query() {
        let kind = DataStructureKind::PoolMem;
        assert_eq!(step(kind, &set(&[3]), &Event::mem(1, 4, 5)), Ok(set(&[3])));
        assert_eq!(step(kind, &set(&[3]), &Event::mem(1, 3, 3)), Ok(set(&[3])));
        assert_eq!(step(kind, &set(&[3]), &Event::mem(1, 3, 4)), Err(NotEnabled));
        assert_eq!(step(kind, &set(&[3]), &Event::mem(1, 4, 4)), Err(NotEnabled));
        // mem is not in the plain pool's alphabet
        assert_eq!(step(DataStructureKind::Pool, &set(&[3]), &Event::mem(1, 3, 3)), Err(NotEnabled));
    }

    #[test]
    fn queue_fifo() {
        let kind = DataStructureKind::Queue;
        assert_eq!(step(kind, &seq(&[]), &Event::deq(1, None)), Ok(seq(&[])));
        assert_eq!(step(kind, &seq(&[1, 2]), &Event::deq(3, Some(1))), Ok(seq(&[2])));
        assert_eq!(step(kind, &seq(&[1, 2]), &Event::deq(3, Some(2))), Err(NotEnabled));
        assert_eq!(step(kind, &seq(&[1]), &Event::deq(3, None)), Err(NotEnabled));
    }

    #[test]
    fn stack_lifo() {
        let kind = DataStructureKind::Stack;
        // top of ⟨1,2⟩ is 2, so pop(1) is not enabled
        assert_eq!(step(kind, &seq(&[1, 2]), &Event::pop(3, Some(1))), Err(NotEnabled));
        assert_eq!(step(kind, &seq(&[1, 2]), &Event::pop(3, Some(2))), Ok(seq(&[1])));
        assert_eq!(step(kind, &seq(&[]), &Event::pop(3, None)), Ok(seq(&[])));
    }

    #[test]
    fn register_reads_default_to_zero() {
        let kind = DataStructureKind::Register;
        let q0 = initial_state(kind);
        let q1 = step(kind, &q0, &Event::write(1, 1, 1)).unwrap();
        assert_eq!(step(kind, &q1, &Event::read(2, 1, 1)), Ok(q1.clone()));
        assert_eq!(step(kind, &q1, &Event::read(2, 2, 0)), Ok(q1.clone()));
        assert_eq!(step(kind, &q1, &Event::read(2, 1, 0)), Err(NotEnabled));
        // writing 0 restores the default, keeping the map canonical
        let q2 = step(kind, &q1, &Event::write(3, 1, 0)).unwrap();
        assert_eq!(q2, q0);
    }

    #[test]
    fn run_behavior_folds_and_reports_first_failure() {
        let b = Behavior::from_events(vec![
            Event::enq(1, 1),
            Event::enq(2, 2),
            Event::deq(3, Some(1)),
        ])
        .unwrap();
        assert_eq!(
            run_behavior(DataStructureKind::Queue, &initial_state(DataStructureKind::Queue), &b),
            Ok(seq(&[2]))
        );

        let bad = Behavior::from_events(vec![Event::take(1, Some(7))]).unwrap();
        assert_eq!(
            run_behavior(DataStructureKind::Pool, &initial_state(DataStructureKind::Pool), &bad),
            Err(InvalidAt(0))
        );

        let reg = Behavior::from_events(vec![
            Event::write(1, 1, 1),
            Event::read(2, 1, 1),
            Event::read(3, 2, 0),
        ])
        .unwrap();
        let end = run_behavior(
            DataStructureKind::Register,
            &initial_state(DataStructureKind::Register),
            &reg,
        )
        .unwrap();
        assert_eq!(end, DsState::Map(BTreeMap::from([(1, 1)])));
    }

    #[test]
    fn validity_examples() {
        let ok = Behavior::from_events(vec![Event::enq(1, 1), Event::deq(2, Some(1))]).unwrap();
        assert!(is_valid_behavior(DataStructureKind::Queue, &ok));

        let fifo_violation =
            Behavior::from_events(vec![Event::enq(1, 1), Event::enq(2, 2), Event::deq(3, Some(2))])
                .unwrap();
        assert!(!is_valid_behavior(DataStructureKind::Queue, &fifo_violation));

        // the nine-event worked example
        let e = Behavior::from_events(vec![
            Event::enq(1, 1),
            Event::enq(2, 2),
            Event::deq(3, Some(1)),
            Event::enq(4, 3),
            Event::deq(5, Some(2)),
            Event::enq(6, 4),
            Event::enq(7, 5),
            Event::deq(8, Some(3)),
            Event::deq(9, Some(4)),
        ])
        .unwrap();
        assert!(is_valid_behavior(DataStructureKind::Queue, &e));
    }

    #[test]
    fn duplicate_ids_rejected() {
        assert_eq!(
            Behavior::from_events(vec![Event::enq(1, 1), Event::deq(1, Some(1))]),
            Err(DuplicateEventId(1))
        );
    }

    #[test]
    fn behavior_display() {
        assert_eq!(Behavior::empty().to_string(), "ε");
        let b = Behavior::from_events(vec![
            Event::enq(1, 1),
            Event::deq(2, None),
            Event::mem(3, 2, 3),
            Event::write(4, 1, 9),
        ])
        .unwrap();
        assert_eq!(b.to_string(), "enq(1)·deq(NULL)·mem(2,3)·wr1(9)");
    }

    #[test]
    fn behavior_text_round_trip() {
        let b = Behavior::from_events(vec![
            Event::enq(1, 1),
            Event::deq(2, None),
            Event::mem(3, 2, 3),
            Event::read(4, 2, 0),
        ])
        .unwrap();
        let text = format_behavior(&b);
        assert_eq!(text, "1 enq 1 -\n2 deq - NULL\n3 mem 2 3\n4 rd2 - 0\n");
        assert_eq!(parse_behavior(&text).unwrap(), b);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = parse_behavior("1 enq 1 -\n2 deq -\n").unwrap_err();
        assert_eq!(err.line, 2);
        let err = parse_behavior("1 frob 1 -\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_behavior("1 enq x -\n").unwrap_err();
        assert_eq!(err.line, 1);
    }
}
