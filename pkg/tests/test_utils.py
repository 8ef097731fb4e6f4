import pytest

from utils import (ceil_log2, format_table, iter_content_lines, parse_int_tokens, read_binary_file,
                   read_text_file, write_binary_file, write_text_file)


@pytest.mark.parametrize("x, expected", [(1, 0), (2, 1), (3, 2), (4, 2), (5, 3), (2 ** 70, 70), (2 ** 70 + 1, 71)])
def test_ceil_log2(x, expected):
    assert ceil_log2(x) == expected


def test_ceil_log2_rejects_zero():
    with pytest.raises(ValueError):
        ceil_log2(0)


def test_content_lines_skip_comments():
    assert list(iter_content_lines("# c\n\n  1 2 \n#x\n3\n")) == ['1 2', '3']


def test_parse_int_tokens():
    assert parse_int_tokens("1 2\n# 9\n 3\n") == [1, 2, 3]
    with pytest.raises(ValueError):
        parse_int_tokens("1 b")


def test_file_round_trips(tmp_path):
    text_path = str(tmp_path / 'a.txt')
    write_text_file(text_path, "和图\n")
    assert read_text_file(text_path) == "和图\n"
    binary_path = str(tmp_path / 'a.bin')
    write_binary_file(binary_path, b"\x53\x01")
    assert read_binary_file(binary_path) == b"\x53\x01"
    with pytest.raises(FileNotFoundError):
        read_text_file(str(tmp_path / 'missing'))


def test_format_table():
    text = format_table(('a', 'bb'), [(1, 2), (333, 4)])
    assert text.splitlines() == ['a    bb', '---  --', '1    2', '333  4']
