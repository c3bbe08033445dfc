#pragma once

#include <stdexcept>
#include <string>

namespace dsseq {

enum class ErrorCode { InvalidArgument = 1, Parse = 2, Verification = 3, Internal = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dsseq
