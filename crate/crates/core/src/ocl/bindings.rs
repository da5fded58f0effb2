//! Bindings file format: one `name = value` per line, `#` comments, and an
//! optional leading `angle_unit = degrees|radians` header.

use super::eval::{AngleUnit, Env};
use super::OclError;

pub fn parse_bindings(text: &str) -> Result<Env, OclError> {
    let mut env = Env::new(AngleUnit::default());
    let mut seen_entry = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |message: String| OclError::Bindings {
            line: line_no,
            message,
        };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (name, value) = line
            .split_once('=')
            .ok_or_else(|| err(format!("expected 'name = value', found '{line}'")))?;
        let (name, value) = (name.trim(), value.trim());

        if name == "angle_unit" {
            if seen_entry {
                return Err(err("angle_unit must be the first entry".into()));
            }
            env.angle_unit = value.parse().map_err(err)?;
            seen_entry = true;
            continue;
        }
        seen_entry = true;

        let valid_name = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid_name {
            return Err(err(format!("invalid identifier '{name}'")));
        }
        if env.get(name).is_some() {
            return Err(err(format!("'{name}' bound twice")));
        }
        let number: f64 = value
            .parse()
            .map_err(|_| err(format!("'{value}' is not a number")))?;
        env.bind(name, number).map_err(|e| err(e.to_string()))?;
    }
    Ok(env)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_comments_and_values() {
        let env = parse_bindings(
            "# pen tip\nangle_unit = radians\ncone_length = 5.0  # mm\n\ncone_angle=0.5\n",
        )
        .unwrap();
        assert_eq!(env.angle_unit, AngleUnit::Radians);
        assert_eq!(env.get("cone_length"), Some(5.0));
        assert_eq!(env.get("cone_angle"), Some(0.5));
    }

    #[test]
    fn defaults_to_degrees() {
        assert_eq!(parse_bindings("x = 1").unwrap().angle_unit, AngleUnit::Degrees);
    }

    #[test]
    fn rejects_bad_lines() {
        for (text, line) in [
            ("x = 1\nangle_unit = degrees", 2),
            ("x 1", 1),
            ("x = 1\nx = 2", 2),
            ("1x = 2", 1),
            ("x = abc", 1),
            ("x = inf", 1),
            ("angle_unit = grads", 1),
        ] {
            match parse_bindings(text) {
                Err(OclError::Bindings { line: l, .. }) => assert_eq!(l, line, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }
}
