//! Command verbs. Each verb resolves its arguments against the session and
//! hands them to one library call.

use std::fmt::Write as _;

use super::render::render_simples_with;
use super::session::{CliError, Session};
use crate::picard::{coverage_report, iota_solver, orbit_invariant, Closure};
use crate::projectives::{
    cokernel_hilbert, is_projective, kernel_of_surjection, maximal_embedding, simple_factors,
};
use crate::simples::ext1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Show,
    Projective { module: String },
    Factors { module: String },
    Apply { expr: String, module: String },
    Theta { p: String, q: String },
    Kernel { module: String, simple: String },
    Coker { p: String, q: String },
    Ext { s: String, t: String },
    Orbit { module: String },
    Connect { p: String, q: String },
    Coverage { modules: Vec<String>, closure: Closure, window: (i64, i64) },
    Compose { expr: String },
    Render { format: Format, apply: Option<String>, window: (i64, i64) },
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().fold(String::new(), |mut acc, line| {
        let _ = writeln!(acc, "{line}");
        acc
    })
}

pub fn execute(session: &Session, command: &Command) -> Result<String, CliError> {
    let out = match command {
        Command::Show => session.render(),
        Command::Projective { module } => format!("{}\n", is_projective(&session.module(module)?)),
        Command::Factors { module } => simple_factors(&session.module(module)?)?.to_string(),
        Command::Apply { expr, module } => {
            let g = session.element(expr)?;
            format!("{}\n", g.act_on_projective(&session.module(module)?)?)
        }
        Command::Theta { p, q } => {
            format!("{}\n", maximal_embedding(&session.module(p)?, &session.module(q)?)?)
        }
        Command::Kernel { module, simple } => {
            let k = kernel_of_surjection(&session.module(module)?, &session.simple(simple)?)?;
            match k.twist {
                None => format!("{}\n", k.module),
                Some(l) => format!("{}\ntwist: (z + {l})\n", k.module),
            }
        }
        Command::Coker { p, q } => {
            cokernel_hilbert(&session.module(p)?, &session.module(q)?)?.to_string()
        }
        Command::Ext { s, t } => {
            let table = ext1(session.params, &session.simple(s)?, &session.simple(t)?)?;
            if table.is_empty() {
                "0\n".to_string()
            } else {
                lines(table.iter().map(|(d, k)| format!("degree {d}: {k}")))
            }
        }
        Command::Orbit { module } => {
            let set = orbit_invariant(&session.module(module)?)?;
            let items: Vec<String> = set.iter().map(i64::to_string).collect();
            format!("{{{}}}\n", items.join(", "))
        }
        Command::Connect { p, q } => match iota_solver(&session.module(p)?, &session.module(q)?)? {
            Some(g) => format!("{g}\n"),
            None => "not connected by involutions\n".to_string(),
        },
        Command::Coverage { modules, closure, window } => {
            let base = modules.iter().map(|m| session.module(m)).collect::<Result<Vec<_>, _>>()?;
            coverage_report(&base, *closure, *window)?.to_string()
        }
        Command::Compose { expr } => format!("{}\n", session.element(expr)?),
        Command::Render { format, apply, window } => {
            let g = apply.as_deref().map(|e| session.element(e)).transpose()?;
            render_simples_with(session.params, *format, *window, g.as_ref())?
        }
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(session: &str, command: Command) -> Result<String, CliError> {
        execute(&Session::parse(session).unwrap(), &command)
    }

    const M2: &str = "gwa { m = 2 }\nmodule P { window = -2..0 ; letters = f, z+m }\n";

    #[test]
    fn verbs() {
        let projective = Command::Projective { module: "A".into() };
        assert_eq!(run(M2, projective).unwrap(), "true\n");
        let coverage = Command::Coverage {
            modules: vec!["A".into()],
            closure: Closure::Iotas,
            window: (-3, 3),
        };
        assert!(run(M2, coverage).unwrap().starts_with("NOT GENERATING: uncovered Z<-1>\n"));
        assert_eq!(run(M2, Command::Compose { expr: "i{0} * i{0}".into() }).unwrap(), "identity\n");
        assert_eq!(run(M2, Command::Orbit { module: "A".into() }).unwrap(), "{0, 1}\n");
        assert_eq!(run(M2, Command::Ext { s: "X<0>".into(), t: "Y<0>".into() }).unwrap(), "0\n");
        let theta = Command::Theta { p: "A".into(), q: "A<1>".into() };
        assert_eq!(run(M2, theta).unwrap(), "(z+0)(z+2)\n");
    }

    #[test]
    fn error_kinds() {
        let missing = run(M2, Command::Factors { module: "Nope".into() }).unwrap_err();
        assert_eq!(missing.exit_code(), 2);
        let bad = run(M2, Command::Kernel { module: "A".into(), simple: "Z<-1>".into() }).unwrap_err();
        assert_eq!(bad.exit_code(), 1);
    }
}
