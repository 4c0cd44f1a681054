#pragma once

#include <string>

namespace crosscap::surface {

/// Shipped curve-spec documents (genus 13 and 14), identical to the files under
/// data/. Throws std::invalid_argument for other genera.
const std::string& embedded_curve_document(unsigned genus);

}  // namespace crosscap::surface
