import unittest
import io
import json
from partverify import util
from partverify.util import Info, RecordWriter

class TestInfo(unittest.TestCase):
    def test_defaults(self):
        info = Info('info', 'message')
        self.assertIsNone(info.data)
        self.assertIsNone(info.exc)

    def test_drain(self):
        def gen():
            yield Info('info', 'start')
            yield Info('info', 'first', data=1)
            yield Info('debug', 'middle')
            yield Info('info', 'second', data=2)
            yield Info('info', 'end')

        self.assertEqual(util.drain(gen()), 2)
        self.assertIsNone(util.drain(iter([])))

class TestExceptions(unittest.TestCase):
    def test_hierarchy(self):
        for cls in (util.EncodingError, util.DomainError,
                util.PreconditionError, util.NormalizationError):
            self.assertTrue(issubclass(cls, util.PartitionError))
            self.assertTrue(issubclass(cls, ValueError))
        self.assertTrue(issubclass(util.ConsistencyError, RuntimeError))
        self.assertFalse(issubclass(util.ConsistencyError, util.PartitionError))

class TestPartitionText(unittest.TestCase):
    def test_format_partition(self):
        self.assertEqual(util.format_partition((6, 6, 3, 2, 2, 1)), '6,6,3,2,2,1')
        self.assertEqual(util.format_partition(()), '')

    def test_parse_partition(self):
        self.assertEqual(util.parse_partition('6,6,3,2,2,1'), (6, 6, 3, 2, 2, 1))
        self.assertEqual(util.parse_partition(' 4, 4 ,3,1 '), (4, 4, 3, 1))
        self.assertEqual(util.parse_partition(''), ())

    def test_parse_partition_increasing(self):
        with self.assertRaisesRegex(util.EncodingError, '"2"'):
            util.parse_partition('1,1,2,2')

    def test_parse_partition_not_integer(self):
        with self.assertRaisesRegex(util.EncodingError, '"x"'):
            util.parse_partition('3,x,1')

    def test_parse_partition_non_positive(self):
        with self.assertRaisesRegex(util.EncodingError, '"0"'):
            util.parse_partition('3,0')
        with self.assertRaisesRegex(util.EncodingError, '"-1"'):
            util.parse_partition('-1')

    def test_parse_int_tuple(self):
        self.assertEqual(util.parse_int_tuple('2,1', 2, 3, '--divisible'), (2, 1))
        self.assertEqual(util.parse_int_tuple('2,1,2', 2, 3, '--divisible'), (2, 1, 2))
        with self.assertRaisesRegex(util.EncodingError, '--divisible'):
            util.parse_int_tuple('2', 2, 3, '--divisible')
        with self.assertRaisesRegex(util.EncodingError, '--mod'):
            util.parse_int_tuple('2,a', 2, 2, '--mod')

class TestStringify(unittest.TestCase):
    def test_stringify(self):
        self.assertEqual(util.stringify(2 ** 100), str(2 ** 100))
        self.assertEqual(util.stringify((3, 1, 1)), '3,1,1')
        self.assertEqual(util.stringify(()), '')
        self.assertEqual(util.stringify([1, 2]), ['1', '2'])
        self.assertEqual(util.stringify({5: 1, 'x': (2, 1)}), {'5': '1', 'x': '2,1'})
        self.assertIs(util.stringify(True), True)
        self.assertIsNone(util.stringify(None))
        self.assertEqual(util.stringify('101'), '101')

class TestRecordWriter(unittest.TestCase):
    def test_json(self):
        output = util.render_records([
            {'command': 'map', 'params': {'name': 'futang', 'partition': (2, 1)}, 'value': (3,)},
            {'command': 'series', 'params': {'name': 'h'}, 'value': [1, 1, 3]},
            ], 'json')
        lines = output.splitlines()
        self.assertEqual(len(lines), 2)
        self.assertEqual(lines[0], '{"command": "map", "params": {"name": "futang", "partition": "2,1"}, "value": "3"}')
        self.assertEqual(json.loads(lines[1])['value'], ['1', '1', '3'])

    def test_json_drops_template(self):
        output = util.render_records([
            {'command': 'info', 'params': {}, 'size': 3, 'template': 'table.txt'},
            ], 'json')
        self.assertNotIn('template', json.loads(output))

    def test_csv(self):
        output = util.render_records([
            {'command': 'count', 'params': {'n': 5, 'r': 2}, 'value': [4, 4]},
            {'command': 'count', 'params': {'n': 6, 'r': 2}, 'value': [5, 5]},
            ], 'csv')
        self.assertEqual(output, (
            'command,params,value\n'
            'count,n=5;r=2,"4,4"\n'
            'count,n=6;r=2,"5,5"\n'
            ))

    def test_csv_list_params(self):
        output = util.render_records([
            {'command': 'verify', 'params': {'suite': 'franklin', 'r_set': [2, 3]}, 'status': 'pass'},
            ], 'csv')
        self.assertEqual(output, (
            'command,params,status\n'
            'verify,"suite=franklin;r_set=2,3",pass\n'
            ))

    def test_flatten_params(self):
        self.assertEqual(util.flatten_params({'n': '4', 'r_set': ['2', '3']}), 'n=4;r_set=2,3')
        self.assertEqual(util.flatten_params({}), '')

    def test_plain_value(self):
        output = util.render_records([
            {'command': 'series', 'params': {'name': 'h'}, 'value': [1, 1, 3, 5]},
            {'command': 'map', 'params': {}, 'value': (3,)},
            {'command': 'map', 'params': {}, 'value': ()},
            ], 'plain')
        self.assertEqual(output, '1,1,3,5\n3\n\n')

    def test_plain_table(self):
        output = util.render_records([
            {'command': 'info', 'params': {}, 'partition': (3, 1), 'size': 4,
             'odd': True, 'index': None, 't_row': {5: 1}, 'template': 'table.txt'},
            ], 'plain')
        self.assertEqual(output, 'partition: 3,1\nsize: 4\nodd: True\nindex: -\nt_row: 5=1\n')

    def test_footer(self):
        fh = io.StringIO()
        RecordWriter(fh, 'json').footer(0.5)
        self.assertEqual(fh.getvalue(), '{"footer": {"elapsed": "0.500s"}}\n')

        fh = io.StringIO()
        RecordWriter(fh, 'plain').footer(0.5)
        self.assertEqual(fh.getvalue(), '# elapsed: 0.500s\n')

    def test_bad_format(self):
        with self.assertRaises(util.DomainError):
            RecordWriter(io.StringIO(), 'xml')

if __name__ == '__main__':
    unittest.main()
