#pragma once

#include <stdexcept>
#include <string>

namespace evcop {

// Base for every error raised by the library. The CLI maps these to exit code 2.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

class ParamOutOfRange : public Error
{
public:
  using Error::Error;
};

class NonConvergent : public Error
{
public:
  using Error::Error;
};

class NonFinite : public Error
{
public:
  using Error::Error;
};

class BadBracket : public Error
{
public:
  using Error::Error;
};

class OutOfRange : public Error
{
public:
  using Error::Error;
};

class DegenerateSample : public Error
{
public:
  using Error::Error;
};

class ParseError : public Error
{
public:
  using Error::Error;
};

} // namespace evcop
