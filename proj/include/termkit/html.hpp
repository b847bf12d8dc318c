#pragma once

#include <string>
#include <vector>

namespace termkit::html {

/// Extracts the visible body text of an HTML document: script/style/head/
/// nav/header/footer content removed, tags stripped, entities decoded,
/// whitespace normalized (block boundaries become paragraph newlines).
/// Never fails; malformed markup degrades to tag stripping. The result is
/// a fixed point: clean_page(clean_page(x)) == clean_page(x).
std::string clean_page(const std::string& html);

/// All <a href="..."> values in document order, unresolved.
std::vector<std::string> extract_links(const std::string& html);

} // namespace termkit::html
