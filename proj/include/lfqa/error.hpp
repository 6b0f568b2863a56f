#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lfqa {

// Failure class, used to pick the process exit code: bad inputs exit 2,
// numeric failures (non-convergence) exit 3.
enum class ErrorKind { Input, Numeric };

class Error : public std::runtime_error {
public:
    Error(std::string tag, ErrorKind kind, const std::string& message)
        : std::runtime_error(message), tag_(std::move(tag)), kind_(kind) {}

    /// Stable machine-parsable tag, e.g. "missing-view".
    const std::string& tag() const noexcept { return tag_; }
    ErrorKind kind() const noexcept { return kind_; }

private:
    std::string tag_;
    ErrorKind kind_;
};

#define LFQA_DEFINE_ERROR(Name, tag_literal, kind)                      \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& message)                      \
            : Error(tag_literal, kind, message) {}                     \
    }

LFQA_DEFINE_ERROR(MissingViewError, "missing-view", ErrorKind::Input);
LFQA_DEFINE_ERROR(DimensionMismatchError, "dimension-mismatch", ErrorKind::Input);
LFQA_DEFINE_ERROR(DecodeError, "decode-error", ErrorKind::Input);
LFQA_DEFINE_ERROR(IndexOutOfRangeError, "index-out-of-range", ErrorKind::Input);
LFQA_DEFINE_ERROR(EmptyBlockError, "empty-block", ErrorKind::Input);
LFQA_DEFINE_ERROR(TooSmallMliError, "too-small-mli", ErrorKind::Input);
LFQA_DEFINE_ERROR(EmptySequenceError, "empty-sequence", ErrorKind::Input);
LFQA_DEFINE_ERROR(TooFewValuesError, "too-few-values", ErrorKind::Input);
LFQA_DEFINE_ERROR(TooSmallImageError, "too-small-image", ErrorKind::Input);
LFQA_DEFINE_ERROR(EmptyTrainingSetError, "empty-training-set", ErrorKind::Input);
LFQA_DEFINE_ERROR(NonFiniteInputError, "non-finite-input", ErrorKind::Input);
LFQA_DEFINE_ERROR(InvalidHyperparamsError, "invalid-hyperparams", ErrorKind::Input);
LFQA_DEFINE_ERROR(DidNotConvergeError, "did-not-converge", ErrorKind::Numeric);
LFQA_DEFINE_ERROR(DegenerateInputError, "degenerate-input", ErrorKind::Input);
LFQA_DEFINE_ERROR(TooFewSamplesError, "too-few-samples", ErrorKind::Input);
LFQA_DEFINE_ERROR(ParseError, "parse-error", ErrorKind::Input);
LFQA_DEFINE_ERROR(DuplicatePathError, "duplicate-path", ErrorKind::Input);
LFQA_DEFINE_ERROR(NonFiniteMosError, "non-finite-mos", ErrorKind::Input);
LFQA_DEFINE_ERROR(PathMismatchError, "path-mismatch", ErrorKind::Input);
LFQA_DEFINE_ERROR(FormatError, "format-error", ErrorKind::Input);

#undef LFQA_DEFINE_ERROR

}  // namespace lfqa
