"""Miscellaneous utilities
"""
import os
import io
import csv
import json
from collections import namedtuple

import jinja2


#########################################################################
# Common classes and objects handling
#########################################################################

# common namedtuple for yielded messages for certain classes
Info = namedtuple('Info', ['type', 'msg', 'data', 'exc'])
Info.__new__.__defaults__ = (None, None)


class PartitionError(ValueError):
    pass


class EncodingError(PartitionError):
    """A malformed profile word or partition text."""
    pass


class DomainError(PartitionError):
    """A parameter outside the range an operation is defined on."""
    pass


class PreconditionError(PartitionError):
    """An input outside the domain class of a map."""
    pass


class NormalizationError(PartitionError):
    """A rational series whose denominator does not start with 1."""
    pass


class ConsistencyError(RuntimeError):
    """An identity that holds by construction failed to hold."""
    pass


def drain(generator):
    """Exhaust an Info generator and return the last attached data."""
    data = None
    for info in generator:
        if info.data is not None:
            data = info.data
    return data


#########################################################################
# Partition and word text handling
#########################################################################

def format_partition(parts):
    """Format parts as "6,6,3,2,2,1"; the empty partition gives ""."""
    return ','.join(str(p) for p in parts)


def parse_partition(text):
    """Parse "a,b,c" into a tuple of ints, largest part first.

    Raises:
        EncodingError: a token is not a positive integer or the sequence
            increases somewhere.
    """
    text = text.strip()
    if not text:
        return ()

    parts = []
    for token in text.split(','):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise EncodingError(f'"{token}" is not an integer') from None
        if value < 1:
            raise EncodingError(f'"{token}" is not a positive part')
        if parts and value > parts[-1]:
            raise EncodingError(f'"{token}" is larger than the preceding part {parts[-1]} '
                '(parts must be given largest first)')
        parts.append(value)
    return tuple(parts)


def parse_int_tuple(text, min_len, max_len, name):
    """Parse "2,1" style option values into a tuple of ints."""
    try:
        values = tuple(int(v) for v in text.split(','))
    except ValueError:
        raise EncodingError(f'{name}: "{text}" is not a list of integers') from None
    if not min_len <= len(values) <= max_len:
        raise EncodingError(f'{name}: expected {min_len} to {max_len} values, got "{text}"')
    return values


def format_duration(seconds):
    """Format elapsed time for footers, e.g. "0.125s"."""
    return f'{seconds:.3f}s'


#########################################################################
# Output records
#########################################################################

TEMPLATE_DIR = os.path.join(os.path.dirname(__file__), 'resources', 'templates')

_template_env = None

def get_template_env():
    global _template_env
    if _template_env is None:
        _template_env = jinja2.Environment(
            loader=jinja2.FileSystemLoader(TEMPLATE_DIR),
            autoescape=False,
            keep_trailing_newline=False,
            trim_blocks=True,
            lstrip_blocks=True,
            )
        _template_env.globals.update({
            'format_partition': format_partition,
            })
    return _template_env


def stringify(value):
    """Convert a record value to its serialized form.

    Integers become decimal strings so that big counts survive any JSON
    consumer; tuples of ints are treated as partitions.
    """
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, tuple) and all(isinstance(v, int) for v in value):
        return format_partition(value)
    if isinstance(value, (list, tuple)):
        return [stringify(v) for v in value]
    if isinstance(value, dict):
        return {str(k): stringify(v) for k, v in value.items()}
    return value


def flatten_params(params):
    """Flatten a dict as "k=v;k=v", list values joined by ","."""
    return ';'.join(f'{k}=' + (','.join(str(x) for x in v) if isinstance(v, list) else f'{v}')
        for k, v in params.items())


class RecordWriter:
    """Serialize output records as json lines, csv rows, or plain text.

    A record is a dict whose first keys are "command" and "params". The
    optional "template" key selects the plain-text template and is never
    serialized.
    """
    FORMATS = ('json', 'csv', 'plain')

    def __init__(self, fh, format='json'):
        if format not in self.FORMATS:
            raise DomainError(f'unknown output format "{format}"')
        self.fh = fh
        self.format = format
        self._csv_writer = None
        self._csv_fields = None

    def write(self, record):
        record = dict(record)
        template = record.pop('template', 'value.txt')
        record = stringify(record)

        if self.format == 'json':
            self.fh.write(json.dumps(record, ensure_ascii=False) + '\n')

        elif self.format == 'csv':
            row = {k: (flatten_params(v) if isinstance(v, dict) else
                       ','.join(v) if isinstance(v, list) else v)
                   for k, v in record.items()}
            if self._csv_writer is None:
                self._csv_fields = list(row)
                self._csv_writer = csv.DictWriter(self.fh, fieldnames=self._csv_fields,
                    extrasaction='ignore', lineterminator='\n')
                self._csv_writer.writeheader()
            self._csv_writer.writerow(row)

        else:
            fields = [(k, v) for k, v in record.items() if k not in ('command', 'params')]
            tpl = get_template_env().get_template(template)
            self.fh.write(tpl.render(fields=fields, **record).rstrip('\n') + '\n')

    def footer(self, elapsed):
        if self.format == 'json':
            self.fh.write(json.dumps({'footer': {'elapsed': format_duration(elapsed)}}) + '\n')
        else:
            self.fh.write(f'# elapsed: {format_duration(elapsed)}\n')


def render_records(records, format='json'):
    """Render records to a string (mainly for tests and embedding)."""
    fh = io.StringIO()
    writer = RecordWriter(fh, format)
    for record in records:
        writer.write(record)
    return fh.getvalue()
