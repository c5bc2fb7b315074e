#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaussforge {

enum class Errc {
    MalformedToken,
    ChordSeenOnceOrThrice,
    SignMismatch,
    DuplicateRole,
    InvalidDiagram,
    AlreadyClosed,
    NoSuchChord,
    RequiresBasePoint,
    NotClosed,
    TooManyChords,
    InvalidSite,
    TooLarge,
    MalformedPolynomial,
};

constexpr std::string_view errc_name(Errc e) noexcept {
    switch (e) {
        case Errc::MalformedToken: return "MalformedToken";
        case Errc::ChordSeenOnceOrThrice: return "ChordSeenOnceOrThrice";
        case Errc::SignMismatch: return "SignMismatch";
        case Errc::DuplicateRole: return "DuplicateRole";
        case Errc::InvalidDiagram: return "InvalidDiagram";
        case Errc::AlreadyClosed: return "AlreadyClosed";
        case Errc::NoSuchChord: return "NoSuchChord";
        case Errc::RequiresBasePoint: return "RequiresBasePoint";
        case Errc::NotClosed: return "NotClosed";
        case Errc::TooManyChords: return "TooManyChords";
        case Errc::InvalidSite: return "InvalidSite";
        case Errc::TooLarge: return "TooLarge";
        case Errc::MalformedPolynomial: return "MalformedPolynomial";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& detail)
        : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}  // namespace gaussforge
