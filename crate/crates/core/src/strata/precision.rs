use crate::error::{Error, Result};
use crate::series::QSeries;

const FIRST_SLACK: i64 = 16;
const RETRIES: u32 = 4;

/// Runs `f` at increasing working precision until the result is exact through `hi`,
/// then truncates to `hi`.
pub(crate) fn with_precision<F>(hi: i64, f: F) -> Result<QSeries>
where
    F: Fn(i64) -> Result<QSeries>,
{
    let mut slack = FIRST_SLACK;
    let mut last = Error::WindowExhausted { needed: hi, have: hi };
    for _ in 0..RETRIES {
        match f(hi + slack) {
            Ok(s) => match s.require(hi) {
                Ok(()) => return Ok(s.truncate(hi)),
                Err(e) => last = e,
            },
            Err(e @ Error::WindowExhausted { .. }) => last = e,
            Err(e) => return Err(e),
        }
        slack *= 2;
    }
    Err(last)
}
