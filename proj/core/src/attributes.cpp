#include "wellcast/attributes.hpp"

namespace wellcast {

namespace {

struct AttrInfo {
    std::string_view code;
    std::string_view column;
    bool nonnegative;
};

constexpr std::array<AttrInfo, kAttrCount> kInfo = {{
    {"OSH", "ON_STREAM_HRS", true},
    {"ADP", "AVG_DOWNHOLE_PRESSURE", false},
    {"ADT", "AVG_DOWNHOLE_TEMPERATURE", false},
    {"ADPT", "AVG_DP_TUBING", false},
    {"AAP", "AVG_ANNULUS_PRESS", false},
    {"ACP", "AVG_CHOKE_SIZE_P", false},
    {"AWP", "AVG_WHP_P", false},
    {"AWT", "AVG_WHT_P", false},
    {"DPC", "DP_CHOKE_SIZE", false},
    {"O", "BORE_OIL_VOL", true},
    {"W", "BORE_WAT_VOL", true},
    {"G", "BORE_GAS_VOL", true},
    {"WI", "BORE_WI_VOL", true},
}};

}  // namespace

std::string_view attr_code(Attr a) { return kInfo[attr_index(a)].code; }
std::string_view attr_csv_column(Attr a) { return kInfo[attr_index(a)].column; }
bool attr_nonnegative(Attr a) { return kInfo[attr_index(a)].nonnegative; }

std::optional<Attr> attr_from_code(std::string_view code) {
    for (Attr a : kAllAttrs)
        if (kInfo[attr_index(a)].code == code) return a;
    return std::nullopt;
}

}  // namespace wellcast
