"""
This module contains the file formats of the command line: binary graymaps (PGM "P5", maxval up
to 255) and comma-separated matrices with a header row.

"""

import numpy as np

PGM_MAGIC = b"P5"
_WHITESPACE = b" \t\n\r\v\f"


def read_pgm(path):
    """Reads a binary PGM file.

    Returns
    -------
    numpy array of uint8, height x width

    Throws
    -------
        FormatError
            With the byte offset of the problem, if the file is not a well-formed P5 graymap.
    """
    with open(path, "rb") as f:
        data = f.read()
    return parse_pgm(data, path)


def parse_pgm(data, source="<bytes>"):
    if not data.startswith(PGM_MAGIC):
        raise FormatError("{}: not a binary PGM file (magic number P5 expected)".format(source), offset=0)

    pos = len(PGM_MAGIC)
    fields = []
    while len(fields) < 3:
        pos = _skip_blanks(data, pos)
        if pos >= len(data):
            raise FormatError("{}: truncated header".format(source), offset=pos)
        end = pos
        while end < len(data) and data[end:end + 1] not in _WHITESPACE and data[end:end + 1] != b"#":
            end += 1
        token = data[pos:end]
        if not token.isdigit():
            raise FormatError("{}: invalid header field {!r}".format(source, token), offset=pos)
        fields.append(int(token))
        pos = end

    width, height, maxval = fields
    if width < 1 or height < 1:
        raise FormatError("{}: invalid size {}x{}".format(source, width, height), offset=pos)
    if not 0 < maxval <= 255:
        raise FormatError("{}: maxval {} not supported, 1..255 expected".format(source, maxval), offset=pos)
    if pos >= len(data) or data[pos:pos + 1] not in _WHITESPACE:
        raise FormatError("{}: missing whitespace before the raster".format(source), offset=pos)
    pos += 1

    expected = width * height
    if len(data) - pos < expected:
        raise FormatError("{}: raster truncated, {} bytes expected, {} found"
                          .format(source, expected, len(data) - pos), offset=len(data))
    pixels = np.frombuffer(data, dtype=np.uint8, count=expected, offset=pos)
    if pixels.max(initial=0) > maxval:
        bad = pos + int(np.argmax(pixels > maxval))
        raise FormatError("{}: pixel above maxval {}".format(source, maxval), offset=bad)
    return pixels.reshape((height, width)).copy()


def write_pgm(path, img):
    """ Writes the uint8 image [img] as a binary PGM file with maxval 255
    """
    img = np.asarray(img)
    if img.ndim != 2 or img.dtype != np.uint8:
        raise FormatError("a PGM image should be a 2D uint8 array, got {} {}".format(img.dtype, img.shape))
    height, width = img.shape
    with open(path, "wb") as f:
        f.write(b"P5\n%d %d\n255\n" % (width, height))
        f.write(np.ascontiguousarray(img).tobytes())


def to_uint8(img):
    """ Rescales [img] linearly onto 0..255 for viewing (a constant image maps to 0)
    """
    img = np.asarray(img, dtype=float)
    lo = img.min()
    span = img.max() - lo
    if span == 0:
        return np.zeros(img.shape, dtype=np.uint8)
    return np.rint((img - lo) * (255. / span)).astype(np.uint8)


def read_csv_matrix(path):
    """Reads a comma-separated matrix whose first row is a header.

    Returns
    -------
    header : list of str
    values : numpy array, rows x columns

    Throws
    -------
        FormatError
            With the (1-based) line of the problem.
    """
    with open(path, "r") as f:
        lines = f.read().splitlines()
    if not lines:
        raise FormatError("{}: empty file".format(path), line=1)

    header = [name.strip() for name in lines[0].split(",")]
    rows = []
    for number, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split(",")
        if len(cells) != len(header):
            raise FormatError("{}: {} columns found, {} expected".format(path, len(cells), len(header)),
                              line=number)
        try:
            rows.append([float(cell) for cell in cells])
        except ValueError:
            raise FormatError("{}: not a number in {!r}".format(path, line), line=number)
    if not rows:
        raise FormatError("{}: no data row".format(path), line=len(lines))
    return header, np.array(rows)


def write_csv_matrix(path, values, header=None):
    """ Writes [values] with a header row, every number with 17 significant digits
    """
    values = np.array(values, dtype=float, ndmin=2)
    if header is None:
        header = ["c{}".format(j + 1) for j in range(values.shape[1])]
    np.savetxt(path, values, fmt="%.17g", delimiter=",", header=",".join(header), comments="")


def _skip_blanks(data, pos):
    while pos < len(data):
        char = data[pos:pos + 1]
        if char == b"#":
            while pos < len(data) and data[pos:pos + 1] not in b"\r\n":
                pos += 1
        elif char in _WHITESPACE:
            pos += 1
        else:
            break
    return pos


class FormatError(ValueError):
    """Exception raised for malformed input files.
    Attributes:
        value -- explanation of the error
        line -- 1-based line of the problem in a text file, or None
        offset -- byte offset of the problem in a binary file, or None
    """

    def __init__(self, value, line=None, offset=None):
        self.value = value
        self.line = line
        self.offset = offset
    def __str__(self):
        where = ""
        if self.line is not None:
            where = " (line {})".format(self.line)
        elif self.offset is not None:
            where = " (byte {})".format(self.offset)
        return repr(self.value + where)

if __name__ == "__main__":
    pass
