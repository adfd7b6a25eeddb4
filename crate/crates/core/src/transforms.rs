//! Local rewrites on arrangements (placeholder).
