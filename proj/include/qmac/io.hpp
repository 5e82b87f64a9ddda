// This code is licensed under the Apache License, Version 2.0. You may
// obtain a copy of this license in the LICENSE.txt file in the root directory
// of this source tree or at http://www.apache.org/licenses/LICENSE-2.0.

#ifndef QMAC_IO_HPP
#define QMAC_IO_HPP

#include <string>

#include <json.hpp>

#include "qmac/optimize.hpp"

namespace qmac {

using json = nlohmann::json;

/// Round to 12 significant digits; emitted reports and regions go through
/// this so identical runs print identical bytes.
double round12(double x);

// State files hold the full matrix at full precision, so save/load round
// trips are exact.
json state_to_json(const LabeledState& s);
LabeledState state_from_json(const json& j);
void save_state(const LabeledState& s, const std::string& path);
LabeledState load_state(const std::string& path);

json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const json& j);
void save_channel(const KrausChannel& ch, const std::string& path);
KrausChannel load_channel(const std::string& path);

enum class Format { Json, Csv };

std::string emit_region(const RegionCloud& cloud, const std::string& channel,
                        Format format,
                        const std::pair<std::string, std::string>& columns = {
                            "qa", "qb"});

std::string emit_report(const AdditivityReport& report, Format format);

/// Raw six-bound record plus its (ra, rb, qa, qb) corner points.
std::string emit_six_bound(const SixBound4& bound, const std::string& channel,
                           int k, Format format);

}  // namespace qmac

#endif
