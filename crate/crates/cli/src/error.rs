use std::fmt;

/// Failure classes, each with its own process exit code.
#[derive(Debug)]
pub enum CliError {
    /// Bad configuration or terminals: exit 2.
    Config(String),
    /// Unreadable, unwritable or malformed files: exit 3.
    Io(String),
    /// Input graph not connected: exit 4.
    Disconnected(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Io(_) => 3,
            CliError::Disconnected(_) => 4,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(m) => write!(f, "configuration error: {m}"),
            CliError::Io(m) => write!(f, "I/O error: {m}"),
            CliError::Disconnected(m) => write!(f, "disconnected input: {m}"),
        }
    }
}

/// Library errors raised by a computation on valid input files.
impl From<flownet::Error> for CliError {
    fn from(e: flownet::Error) -> Self {
        use flownet::Error as E;
        match e {
            E::Disconnected => CliError::Disconnected(e.to_string()),
            E::Parse { .. } => CliError::Io(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;
