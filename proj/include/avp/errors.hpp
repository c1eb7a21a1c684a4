#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace avp {

//! Base class for all errors raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

//! Input failed validation (bad flag value, violated precondition, ...).
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

//! A design column has (numerically) zero norm and cannot be standardized.
class ZeroColumn : public InvalidArgument
{
public:
  ZeroColumn(Eigen::Index column, const std::string& what)
    : InvalidArgument(what)
    , column_(column)
  {}
  Eigen::Index column() const { return column_; }

private:
  Eigen::Index column_;
};

//! Coordinate descent hit its sweep cap; carries the last iterate.
class NoConvergence : public Error
{
public:
  NoConvergence(Eigen::VectorXd last_iterate, const std::string& what)
    : Error(what)
    , last_iterate_(std::move(last_iterate))
  {}
  const Eigen::VectorXd& last_iterate() const { return last_iterate_; }

private:
  Eigen::VectorXd last_iterate_;
};

class DegenerateGrid : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

class EmptyPath : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

class FoldTooSmall : public InvalidArgument
{
public:
  using InvalidArgument::InvalidArgument;
};

class IoError : public Error
{
public:
  using Error::Error;
};

} // namespace avp
