#pragma once

namespace pir::detail {

struct RawEntry {
    const char* id;
    int s;
    int k;
    int n;
    int reference;  // 1: distance benchmark without certificate
    const char* note;
    const char* matrix;
    const char* cert;  // certificate JSON, empty for reference entries
};

extern const RawEntry raw_catalog[];
extern const int raw_catalog_size;

}  // namespace pir::detail
