//! Threaded histories: interleaved invocation/response actions recording a
//! concurrent run, plus the ordering relations the consistency conditions
//! are built on.
//!
//! A history is *well-formed* when every response follows its matching
//! invocation, *complete* when every invocation has a response, and
//! *per-thread sequential* when no thread has two invocations open at once.
//! Checkers only accept histories satisfying all three.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::semantics::{Behavior, Event, Method, ParseError, Value};

/// Identifier of a harness thread.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThreadId(pub u64);

impl fmt::Display for ThreadId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    Invocation,
    Response,
}

/// One invocation or response action. An invocation carries the event's
/// input argument, a response carries its output.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Action {
    pub event_id: u64,
    pub kind: ActionKind,
    pub method: Method,
    pub payload: Option<Value>,
}

/// An action tagged with the thread that performed it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThreadedAction {
    pub thread: ThreadId,
    pub action: Action,
}

impl ThreadedAction {
    pub fn new(thread: ThreadId, action: Action) -> Self {
        ThreadedAction { thread, action }
    }
}

/// Splits an event into its matched invocation/response pair.
pub fn derive_actions(event: &Event) -> (Action, Action) {
    (
        Action {
            event_id: event.id,
            kind: ActionKind::Invocation,
            method: event.method,
            payload: event.input,
        },
        Action {
            event_id: event.id,
            kind: ActionKind::Response,
            method: event.method,
            payload: event.output,
        },
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MalformedReason {
    /// A response without an earlier matching invocation, or an event id
    /// used twice.
    WellFormedness,
    /// An invocation that never receives its response.
    Completeness,
    /// A thread with two open invocations, or a response on a different
    /// thread than its invocation.
    ThreadSequentiality,
}

impl fmt::Display for MalformedReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MalformedReason::WellFormedness => "well-formedness",
            MalformedReason::Completeness => "completeness",
            MalformedReason::ThreadSequentiality => "thread sequentiality",
        };
        f.write_str(s)
    }
}

/// The history violates one of the three validity conditions; `position` is
/// the index of the first offending action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("malformed history: {reason} violated at action {position}")]
pub struct Malformed {
    pub reason: MalformedReason,
    pub position: usize,
}

/// The history is not sequential (some invocation is not immediately
/// followed by its matching response).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
#[error("history is not sequential")]
pub struct NotSequential;

/// A sequence of threaded actions. Construction does not validate; call
/// [`ThreadedHistory::validate`] before checking.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ThreadedHistory {
    actions: Vec<ThreadedAction>,
}

impl ThreadedHistory {
    pub fn new(actions: Vec<ThreadedAction>) -> Self {
        ThreadedHistory { actions }
    }

    pub fn empty() -> Self {
        ThreadedHistory { actions: Vec::new() }
    }

    /// The sequential history in which `thread` performs each event of
    /// `behavior` to completion in order.
    pub fn sequential(thread: ThreadId, behavior: &Behavior) -> Self {
        let mut actions = Vec::with_capacity(behavior.len() * 2);
        for event in behavior.iter() {
            let (inv, res) = derive_actions(event);
            actions.push(ThreadedAction::new(thread, inv));
            actions.push(ThreadedAction::new(thread, res));
        }
        ThreadedHistory { actions }
    }

    pub fn actions(&self) -> &[ThreadedAction] {
        &self.actions
    }

    pub fn len(&self) -> usize {
        self.actions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.actions.is_empty()
    }

    /// Number of events (completed or not) mentioned in the history.
    pub fn event_count(&self) -> usize {
        self.actions
            .iter()
            .filter(|a| a.action.kind == ActionKind::Invocation)
            .count()
    }

    pub fn threads(&self) -> BTreeSet<ThreadId> {
        self.actions.iter().map(|a| a.thread).collect()
    }

    /// Checks well-formedness, completeness, and per-thread sequentiality,
    /// reporting the first violated condition and its position.
    pub fn validate(&self) -> Result<(), Malformed> {
        let mut open: HashMap<u64, (usize, ThreadId, Method)> = HashMap::new();
        let mut open_by_thread: HashMap<ThreadId, u64> = HashMap::new();
        let mut completed: BTreeSet<u64> = BTreeSet::new();

        for (pos, ta) in self.actions.iter().enumerate() {
            let id = ta.action.event_id;
            match ta.action.kind {
                ActionKind::Invocation => {
                    if open.contains_key(&id) || completed.contains(&id) {
                        return Err(Malformed {
                            reason: MalformedReason::WellFormedness,
                            position: pos,
                        });
                    }
                    if open_by_thread.contains_key(&ta.thread) {
                        return Err(Malformed {
                            reason: MalformedReason::ThreadSequentiality,
                            position: pos,
                        });
                    }
                    open.insert(id, (pos, ta.thread, ta.action.method));
                    open_by_thread.insert(ta.thread, id);
                }
                ActionKind::Response => match open.remove(&id) {
                    None => {
                        return Err(Malformed {
                            reason: MalformedReason::WellFormedness,
                            position: pos,
                        });
                    }
                    Some((_, inv_thread, inv_method)) => {
                        if inv_thread != ta.thread {
                            return Err(Malformed {
                                reason: MalformedReason::ThreadSequentiality,
                                position: pos,
                            });
                        }
                        if inv_method != ta.action.method {
                            return Err(Malformed {
                                reason: MalformedReason::WellFormedness,
                                position: pos,
                            });
                        }
                        open_by_thread.remove(&ta.thread);
                        completed.insert(id);
                    }
                },
            }
        }

        if let Some(first_open) = open.values().map(|(pos, _, _)| *pos).min() {
            return Err(Malformed {
                reason: MalformedReason::Completeness,
                position: first_open,
            });
        }
        Ok(())
    }

    /// The subsequence of actions performed by `thread`.
    pub fn project_thread(&self, thread: ThreadId) -> ThreadedHistory {
        ThreadedHistory {
            actions: self
                .actions
                .iter()
                .filter(|a| a.thread == thread)
                .cloned()
                .collect(),
        }
    }

    /// The subsequence of actions performed by every thread except `thread`
    /// (the complement of [`project_thread`](Self::project_thread)).
    pub fn remove_thread(&self, thread: ThreadId) -> ThreadedHistory {
        ThreadedHistory {
            actions: self
                .actions
                .iter()
                .filter(|a| a.thread != thread)
                .cloned()
                .collect(),
        }
    }

    /// Whether event `e` precedes event `e2` in real time: the response of
    /// `e` appears before the invocation of `e2`. Both events must be
    /// completed in this history; returns false otherwise.
    pub fn precedes(&self, e: u64, e2: u64) -> bool {
        let res_pos = self.actions.iter().position(|a| {
            a.action.event_id == e && a.action.kind == ActionKind::Response
        });
        let inv_pos = self.actions.iter().position(|a| {
            a.action.event_id == e2 && a.action.kind == ActionKind::Invocation
        });
        match (res_pos, inv_pos) {
            (Some(r), Some(i)) => r < i,
            _ => false,
        }
    }

    /// Converts a sequential history to the behavior it denotes: every
    /// invocation must be immediately followed by its matching response.
    pub fn to_behavior(&self) -> Result<Behavior, NotSequential> {
        if self.actions.len() % 2 != 0 {
            return Err(NotSequential);
        }
        let mut events = Vec::with_capacity(self.actions.len() / 2);
        for pair in self.actions.chunks(2) {
            let (inv, res) = (&pair[0], &pair[1]);
            let matched = inv.action.kind == ActionKind::Invocation
                && res.action.kind == ActionKind::Response
                && inv.action.event_id == res.action.event_id
                && inv.action.method == res.action.method;
            if !matched {
                return Err(NotSequential);
            }
            events.push(Event::new(
                inv.action.event_id,
                inv.action.method,
                inv.action.payload,
                res.action.payload,
            ));
        }
        Behavior::from_events(events).map_err(|_| NotSequential)
    }
}

/// Serializes a history as one `thread event_id kind method payload` record
/// per line; `kind` is `inv` or `res`, `payload` uses the behavior-file
/// value syntax.
pub fn format_trace(history: &ThreadedHistory) -> String {
    let mut out = String::new();
    for ta in history.actions() {
        let kind = match ta.action.kind {
            ActionKind::Invocation => "inv",
            ActionKind::Response => "res",
        };
        let payload = match ta.action.payload {
            None => "-".to_string(),
            Some(v) => v.to_string(),
        };
        out.push_str(&format!(
            "{} {} {} {} {}\n",
            ta.thread, ta.action.event_id, kind, ta.action.method, payload
        ));
    }
    out
}

/// Parses the format written by [`format_trace`]. Blank lines are ignored.
pub fn parse_trace(text: &str) -> Result<ThreadedHistory, ParseError> {
    let mut actions = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if fields.len() != 5 {
            return Err(ParseError::new(
                line,
                format!(
                    "expected `thread event_id kind method payload`, got {} fields",
                    fields.len()
                ),
            ));
        }
        let thread = fields[0]
            .parse()
            .map(ThreadId)
            .map_err(|_| ParseError::new(line, format!("bad thread id `{}`", fields[0])))?;
        let event_id = fields[1]
            .parse()
            .map_err(|_| ParseError::new(line, format!("bad event id `{}`", fields[1])))?;
        let kind = match fields[2] {
            "inv" => ActionKind::Invocation,
            "res" => ActionKind::Response,
            other => {
                return Err(ParseError::new(line, format!("expected `inv` or `res`, got `{other}`")))
            }
        };
        let method = fields[3]
            .parse()
            .map_err(|e| ParseError::new(line, e))?;
        let payload = match fields[4] {
            "-" => None,
            "NULL" => Some(Value::Null),
            n => Some(Value::Nat(n.parse().map_err(|_| {
                ParseError::new(line, format!("expected a natural, `NULL`, or `-`, got `{n}`"))
            })?)),
        };
        actions.push(ThreadedAction::new(
            thread,
            Action { event_id, kind, method, payload },
        ));
    }
    Ok(ThreadedHistory::new(actions))
}
