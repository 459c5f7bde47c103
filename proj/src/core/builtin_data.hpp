#pragma once

namespace eichler {

// Built-in copies of the data files shipped in data/: the named-group catalog
// and the stored presentations.  A test keeps the files and these strings in
// sync.
const char* builtin_catalog_text();
const char* builtin_presentations_text();

} // namespace eichler
