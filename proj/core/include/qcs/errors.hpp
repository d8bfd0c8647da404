#pragma once

#include <stdexcept>
#include <string>

namespace qcs {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// qsim
class SizeError : public Error { using Error::Error; };
class IndexError : public Error { using Error::Error; };
class GateError : public Error { using Error::Error; };
class CorruptStateError : public Error { using Error::Error; };

// rsa
class ArgumentError : public Error { using Error::Error; };
class NoInverseError : public Error { using Error::Error; };
class RangeError : public Error { using Error::Error; };
class GenerationError : public Error { using Error::Error; };
class EncodingError : public Error { using Error::Error; };

// nonlocal_xor / protocol
class ProtocolError : public Error { using Error::Error; };

// netsim
class BusError : public Error { using Error::Error; };

}  // namespace qcs
