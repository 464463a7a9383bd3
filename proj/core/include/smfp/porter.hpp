#pragma once

#include <string>
#include <string_view>

namespace smfp {

// Porter stemming algorithm, ported from Martin Porter's reference
// implementation including its two published post-1980 departures
// ("bli" -> "ble" in step 2, and the "logi" -> "log" rule). Input must be a
// lower-case letter sequence; words of length <= 2 are returned unchanged.
std::string porter_stem(std::string_view word);

}  // namespace smfp
