#!/usr/bin/env python3
"""Regenerate core/src/catalog_data.inc from the JSON files in catalog/.

Run from the repository root after editing any catalog file.  The unit tests
assert byte equality between the embedded documents and the files, so this
script is the only supported way to change the embedded table.
"""

import pathlib

ORDER = [
    "abelian",
    "su2su2u1_phi0",
    "su2su2u1_phi_pi4",
    "su2su2u1_phi_3pi4",
    "su2su2u1_standard_phi",
    "r3su2u1_standard_phi",
    "bi_su2su2u1",
]


def main() -> None:
    root = pathlib.Path(__file__).resolve().parent.parent
    lines = [
        "// Generated from the JSON files in catalog/ by tools/regen_catalog.py.\n",
        "// The test suite asserts that each embedded document is byte-identical\n",
        "// to its file.\n",
        "static constexpr CatalogEntry kEntries[] = {\n",
    ]
    for name in ORDER:
        text = (root / "catalog" / f"{name}.json").read_text()
        if ')json"' in text:
            raise SystemExit(f"{name}.json contains the raw-string delimiter")
        lines.append(f'    {{"{name}",\n     R"json({text})json"}},\n')
    lines.append("};\n")
    (root / "core" / "src" / "catalog_data.inc").write_text("".join(lines))


if __name__ == "__main__":
    main()
