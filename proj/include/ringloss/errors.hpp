#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ringloss {

// Base of every error this library raises on bad input or bad files.
// DataError covers malformed or inconsistent data (CLI exit code 2),
// FileError covers I/O and document-format problems (CLI exit code 3).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DataError : public Error {
public:
  using Error::Error;
};

class FileError : public Error {
public:
  using Error::Error;
};

// ---- data errors ----------------------------------------------------------

// Header-level CSV problems: missing, unknown, or duplicate columns.
class SchemaError : public DataError {
public:
  using DataError::DataError;
};

// Cell- or row-level CSV problems; carries the 1-based file line number.
class RowError : public DataError {
public:
  RowError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class ParseError : public DataError {
public:
  using DataError::DataError;
};

// Some records carry a gross-loss target and some do not.
class MixedTargetError : public DataError {
public:
  using DataError::DataError;
};

// The operation needs targets but the dataset has none.
class MissingTargetError : public DataError {
public:
  using DataError::DataError;
};

// A feature column has no observed value to fit an imputation fill from.
class AllMissingError : public DataError {
public:
  AllMissingError(std::size_t column, const std::string& name)
      : DataError("column " + std::to_string(column) + " (" + name +
                  ") has no observed training value"),
        column_(column) {}
  std::size_t column() const { return column_; }

private:
  std::size_t column_;
};

class WidthMismatchError : public DataError {
public:
  using DataError::DataError;
};

class EmptySelectionError : public DataError {
public:
  using DataError::DataError;
};

class DegenerateSplitError : public DataError {
public:
  using DataError::DataError;
};

class SingularError : public DataError {
public:
  using DataError::DataError;
};

class InvalidKError : public DataError {
public:
  using DataError::DataError;
};

class InvalidFoldsError : public DataError {
public:
  using DataError::DataError;
};

class LengthMismatchError : public DataError {
public:
  using DataError::DataError;
};

class EmptyError : public DataError {
public:
  using DataError::DataError;
};

// ---- file errors ----------------------------------------------------------

class IoError : public FileError {
public:
  using FileError::FileError;
};

// Malformed model or report document.
class FormatError : public FileError {
public:
  using FileError::FileError;
};

// Well-formed document with an unsupported format_version.
class VersionError : public FileError {
public:
  using FileError::FileError;
};

}  // namespace ringloss
