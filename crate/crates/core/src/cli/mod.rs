//! Batch front end: session files, command verbs and figures.

mod commands;
mod render;
mod session;

pub use commands::{execute, Command, Format};
pub use render::{render_simples, render_simples_with};
pub use session::{CliError, ParseError, Session};
