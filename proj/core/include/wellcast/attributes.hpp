#ifndef WELLCAST_ATTRIBUTES_HPP
#define WELLCAST_ATTRIBUTES_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace wellcast {

// Numeric attributes of one well-day record, in canonical order. WI (water
// injected) exists only on injector wells and is never a model feature.
enum class Attr : int {
    OSH,   // on-stream hours
    ADP,   // avg downhole pressure
    ADT,   // avg downhole temperature
    ADPT,  // avg differential pressure, tubing
    AAP,   // avg annulus pressure
    ACP,   // avg choke size percent
    AWP,   // avg wellhead pressure
    AWT,   // avg wellhead temperature
    DPC,   // differential pressure over choke
    O,     // bore oil volume (forecast target)
    W,     // bore water volume
    G,     // bore gas volume
    WI,    // bore water injected volume
};

inline constexpr std::size_t kAttrCount = 13;

inline constexpr std::array<Attr, kAttrCount> kAllAttrs = {
    Attr::OSH, Attr::ADP, Attr::ADT, Attr::ADPT, Attr::AAP, Attr::ACP, Attr::AWP,
    Attr::AWT, Attr::DPC, Attr::O,   Attr::W,    Attr::G,   Attr::WI};

std::string_view attr_code(Attr a);                    // "OSH", "ADP", ...
std::string_view attr_csv_column(Attr a);              // "ON_STREAM_HRS", ...
std::optional<Attr> attr_from_code(std::string_view);  // inverse of attr_code

// Volumes and on-stream hours cannot be negative; a negative cell is a
// recording artifact and parses to missing.
bool attr_nonnegative(Attr a);

inline std::size_t attr_index(Attr a) { return static_cast<std::size_t>(a); }

}  // namespace wellcast

#endif  // WELLCAST_ATTRIBUTES_HPP
