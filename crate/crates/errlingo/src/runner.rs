//! Child process execution with passthrough stdout and captured stderr.

use std::io::{Read, Write};
use std::process::{Command, ExitStatus, Stdio};

use thiserror::Error;

/// The command to wrap. `argv[0]` is spawned directly; no shell is involved.
#[derive(Debug, Clone)]
pub struct RunRequest {
    pub argv: Vec<String>,
}

impl RunRequest {
    pub fn new(argv: Vec<String>) -> Self {
        assert!(!argv.is_empty(), "argv must name a program");
        RunRequest { argv }
    }
}

/// Outcome of a wrapped run. All stderr lines are kept; truncation is the
/// pipeline's job.
#[derive(Debug)]
pub struct RunResult {
    pub status: ExitStatus,
    pub stdout_text: String,
    pub stderr_bytes: Vec<u8>,
    pub stderr_lines: Vec<String>,
}

impl RunResult {
    /// Exit code to propagate. On Unix a signal death maps to 128 + signal,
    /// the shell convention.
    pub fn exit_code(&self) -> i32 {
        if let Some(code) = self.status.code() {
            return code;
        }
        #[cfg(unix)]
        {
            use std::os::unix::process::ExitStatusExt;
            if let Some(sig) = self.status.signal() {
                return 128 + sig;
            }
        }
        1
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("cannot run '{program}': {source}")]
    Spawn {
        program: String,
        #[source]
        source: std::io::Error,
    },
    #[error("failed reading child stream: {0}")]
    Capture(#[from] std::io::Error),
}

/// Split captured bytes into lines on `\n`, tolerating a missing final
/// newline. Invalid UTF-8 is replaced, never fatal.
pub fn split_stderr_lines(bytes: &[u8]) -> Vec<String> {
    let text = String::from_utf8_lossy(bytes);
    let mut lines: Vec<String> = text.split('\n').map(str::to_owned).collect();
    if lines.last().is_some_and(String::is_empty) {
        lines.pop();
    }
    lines
}

/// Run the command, streaming its stdout to this process's stdout while
/// recording it, and capturing stderr completely.
pub fn run_command(req: &RunRequest) -> Result<RunResult, RunError> {
    run_command_streaming(req, std::io::stdout())
}

/// Like [`run_command`] but with an explicit sink for the live stdout
/// passthrough. Both streams are drained on their own threads so a child
/// filling one pipe can never block the other.
pub fn run_command_streaming<W: Write + Send>(
    req: &RunRequest,
    mut passthrough: W,
) -> Result<RunResult, RunError> {
    let program = &req.argv[0];
    let mut child = Command::new(program)
        .args(&req.argv[1..])
        .stdin(Stdio::inherit())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|source| RunError::Spawn {
            program: program.clone(),
            source,
        })?;

    let mut child_stdout = child.stdout.take().expect("stdout was piped");
    let mut child_stderr = child.stderr.take().expect("stderr was piped");

    let (stdout_bytes, stderr_bytes) = std::thread::scope(|scope| {
        let out_handle = scope.spawn(move || -> std::io::Result<Vec<u8>> {
            let mut recorded = Vec::new();
            let mut buf = [0u8; 8192];
            loop {
                let n = child_stdout.read(&mut buf)?;
                if n == 0 {
                    break;
                }
                passthrough.write_all(&buf[..n])?;
                passthrough.flush()?;
                recorded.extend_from_slice(&buf[..n]);
            }
            Ok(recorded)
        });
        let err_handle = scope.spawn(move || -> std::io::Result<Vec<u8>> {
            let mut captured = Vec::new();
            child_stderr.read_to_end(&mut captured)?;
            Ok(captured)
        });
        let stdout_bytes = out_handle.join().expect("stdout drain panicked");
        let stderr_bytes = err_handle.join().expect("stderr drain panicked");
        (stdout_bytes, stderr_bytes)
    });

    let status = child.wait().map_err(RunError::Capture)?;
    let stdout_bytes = stdout_bytes?;
    let stderr_bytes = stderr_bytes?;
    let stderr_lines = split_stderr_lines(&stderr_bytes);

    Ok(RunResult {
        status,
        stdout_text: String::from_utf8_lossy(&stdout_bytes).into_owned(),
        stderr_bytes,
        stderr_lines,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sh(script: &str) -> RunRequest {
        RunRequest::new(vec!["sh".to_owned(), "-c".to_owned(), script.to_owned()])
    }

    #[test]
    fn clean_run() {
        let result = run_command_streaming(&sh("exit 0"), std::io::sink()).unwrap();
        assert_eq!(result.exit_code(), 0);
        assert!(result.stderr_lines.is_empty());
        assert!(result.stdout_text.is_empty());
    }

    #[test]
    fn stdout_passthrough_and_record() {
        let mut live = Vec::new();
        let result = run_command_streaming(&sh("echo Bonjour"), &mut live).unwrap();
        assert_eq!(result.stdout_text, "Bonjour\n");
        assert_eq!(live, b"Bonjour\n");
    }

    #[test]
    fn stderr_captured_as_lines() {
        let result =
            run_command_streaming(&sh("echo one 1>&2; printf 'two' 1>&2"), std::io::sink()).unwrap();
        assert_eq!(result.stderr_lines, vec!["one".to_owned(), "two".to_owned()]);
    }

    #[test]
    fn exit_status_propagates() {
        for code in [0, 1, 2, 77] {
            let result =
                run_command_streaming(&sh(&format!("exit {code}")), std::io::sink()).unwrap();
            assert_eq!(result.exit_code(), code);
        }
    }

    #[test]
    fn spawn_failure_is_distinct() {
        let req = RunRequest::new(vec!["/nonexistent/program".to_owned()]);
        let err = run_command_streaming(&req, std::io::sink()).unwrap_err();
        assert!(matches!(err, RunError::Spawn { .. }));
    }

    #[test]
    fn stderr_bytes_match_exactly() {
        let result = run_command_streaming(
            &sh("printf 'a\\001b\\nc' 1>&2"),
            std::io::sink(),
        )
        .unwrap();
        assert_eq!(result.stderr_bytes, b"a\x01b\nc");
    }

    #[test]
    fn large_writes_on_both_streams_do_not_deadlock() {
        // 1 MiB each way, far past any single pipe buffer.
        let result = run_command_streaming(
            &sh("dd if=/dev/zero bs=1024 count=1024 2>/dev/null & { dd if=/dev/zero bs=1024 count=1024 2>/dev/null ; } 1>&2 & wait"),
            std::io::sink(),
        )
        .unwrap();
        assert_eq!(result.stdout_text.len(), 1024 * 1024);
        assert_eq!(result.stderr_bytes.len(), 1024 * 1024);
    }

    #[test]
    fn line_split_tolerates_missing_final_newline() {
        assert_eq!(split_stderr_lines(b"a\nb"), vec!["a", "b"]);
        assert_eq!(split_stderr_lines(b"a\nb\n"), vec!["a", "b"]);
        assert!(split_stderr_lines(b"").is_empty());
    }
}
