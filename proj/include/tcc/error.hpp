#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace tcc {

// Domain error with a stable machine-readable code, surfaced by the CLI
// as exit code 3 plus an "error" field in JSON mode.
//
// Codes in use: ParseError, SourceOutOfRange, SettingMismatch, NotAModulator,
// NotInherentModulator, InstanceTooLarge, KTooSmall, NotAVertexCover.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string &message)
        : std::runtime_error(message), code_(std::move(code)) {}

    const std::string &code() const { return code_; }

private:
    std::string code_;
};

} // namespace tcc
