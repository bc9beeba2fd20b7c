"""Rasterize printable ASCII from DejaVu Sans Mono into the embedded glyph table.

Usage: python3 tools/gen_font.py > core/src/report/font_data.hpp
"""
import sys

from PIL import Image, ImageDraw, ImageFont

FONT = "/usr/share/fonts/truetype/dejavu/DejaVuSansMono.ttf"
SIZE = 12


def main() -> None:
    font = ImageFont.truetype(FONT, SIZE)
    ascent, descent = font.getmetrics()
    height = ascent + descent
    width = max(int(round(font.getlength(chr(c)))) for c in range(32, 127))
    out = sys.stdout
    out.write("#pragma once\n\n// Generated by tools/gen_font.py from DejaVu Sans Mono; do not edit.\n\n")
    out.write("#include <cstdint>\n\nnamespace nmeasure::detail {\n\n")
    out.write(f"inline constexpr int kGlyphWidth = {width};\n")
    out.write(f"inline constexpr int kGlyphHeight = {height};\n")
    out.write(f"inline constexpr int kGlyphAscent = {ascent};\n")
    out.write("inline constexpr char kGlyphFirst = ' ';\n")
    out.write("inline constexpr char kGlyphLast = '~';\n\n")
    out.write("// Row-major 8-bit coverage, one block per glyph.\n")
    out.write(f"inline constexpr std::uint8_t kGlyphs[{127 - 32}][{width * height}] = {{\n")
    for c in range(32, 127):
        img = Image.new("L", (width, height), 0)
        ImageDraw.Draw(img).text((0, 0), chr(c), fill=255, font=font)
        data = list(img.tobytes())
        out.write("    {" + ",".join(str(v) for v in data) + "},\n")
    out.write("};\n\n}  // namespace nmeasure::detail\n")


if __name__ == "__main__":
    main()
