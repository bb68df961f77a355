from unittest import mock
import unittest
import os
import io
from collections import OrderedDict
import partverify

root_dir = os.path.abspath(os.path.dirname(__file__))

def setUpModule():
    # mock out user config
    global mockings
    mockings = [
        mock.patch('partverify.PV_USER_DIR', os.path.join(root_dir, 'test_config', 'partverify')),
        mock.patch('partverify.PV_USER_CONFIG', os.path.join(root_dir, 'test_config')),
        ]
    for mocking in mockings:
        mocking.start()

def tearDownModule():
    # stop mock
    for mocking in mockings:
        mocking.stop()

class TestClassConfig(unittest.TestCase):
    @classmethod
    def setUpClass(self):
        self.maxDiff = None

    def test_load(self):
        conf = partverify.Config()
        conf.load(os.path.join(root_dir, 'test_config'))
        self.assertDictEqual(conf['verify'], OrderedDict([
            ('franklin_n_max', 20),
            ('theorem1_n_max', 25),
            ('beck_n_max', 50),
            ('j_max', 6),
            ('r_set', [2, 3]),
            ('perimeter_m_enum', 16),
            ('perimeter_m_series', 200),
            ('regular_m_enum', 14),
            ('regular_m_series', 100),
            ('fail_fast', True),
            ]))
        self.assertDictEqual(conf['output'], OrderedDict([
            ('format', 'csv'),
            ('footer', True),
            ]))
        self.assertDictEqual(conf['custom'], OrderedDict([
            ('key', 'value'),
            ]))

    def test_load_default(self):
        conf = partverify.Config()
        conf.load(os.path.join(root_dir, 'nonexist'))
        self.assertEqual(conf['verify']['r_set'], [2, 3, 4, 5])
        self.assertEqual(conf['enumerate']['perimeter_bound'], 24)
        self.assertEqual(conf['conjecture']['m_max'], 500)
        self.assertEqual(conf['parallel']['threads'], 1)
        self.assertFalse(conf['verify']['fail_fast'])

    def test_load_repeated(self):
        conf = partverify.Config()
        conf.load(os.path.join(root_dir, 'test_config'))

        # check if previous loaded config entries no more exist
        conf.load(os.path.join(root_dir, 'test_config_load_repeated'))
        self.assertEqual(conf['verify']['beck_n_max'], 12)
        self.assertEqual(conf['verify']['franklin_n_max'], 35)
        self.assertEqual(conf['output']['format'], 'json')
        with self.assertRaises(KeyError):
            conf['custom']

    @mock.patch('partverify.PV_CONFIG', 'localconfig.ini')
    @mock.patch('partverify.PV_DIR', '.pvdir')
    @mock.patch('partverify.PV_USER_CONFIG', os.path.join(root_dir, 'test_config_load_constants', 'userconfig.ini'))
    @mock.patch('partverify.PV_USER_DIR', os.path.join(root_dir, 'test_config_load_constants', '.config', 'partverify'))
    def test_load_constants(self):
        # check if PV_USER_DIR, PV_USER_CONFIG, PV_DIR, and PV_CONFIG are honored
        conf = partverify.Config()
        conf.load(os.path.join(root_dir, 'test_config_load_constants'))
        self.assertEqual(conf['verify']['beck_n_max'], 40)
        self.assertEqual(conf['verify']['j_max'], 2)
        self.assertEqual(conf['verify']['theorem1_n_max'], 11)
        self.assertEqual(conf['parallel']['threads'], 2)
        self.assertEqual(conf['conjecture']['r_max'], 5)
        self.assertFalse(conf['output']['footer'])

    def test_load_bad_value(self):
        conf = partverify.Config()
        with self.assertRaisesRegex(ValueError, 'verify.j_max'):
            conf.load(os.path.join(root_dir, 'test_config_bad_value'))

    def test_getitem(self):
        # test lazy loading
        _cwd = os.getcwd()
        os.chdir(os.path.join(root_dir, 'test_config'))

        try:
            conf = partverify.Config()
            self.assertEqual(conf['verify']['franklin_n_max'], 20)
            self.assertEqual(conf['verify']['fail_fast'], True)
            self.assertEqual(conf['custom']['key'], 'value')
        finally:
            os.chdir(_cwd)

    def test_iter(self):
        # test lazy loading
        _cwd = os.getcwd()
        os.chdir(os.path.join(root_dir, 'test_config'))

        try:
            conf = partverify.Config()
            self.assertEqual(list(iter(conf)), ['verify', 'enumerate', 'conjecture', 'output', 'parallel', 'custom'])
        finally:
            os.chdir(_cwd)

    def test_getname(self):
        # test lazy loading
        _cwd = os.getcwd()
        os.chdir(os.path.join(root_dir, 'test_config'))

        try:
            conf = partverify.Config()
            self.assertEqual(conf.getname('verify.franklin_n_max'), '20')
            self.assertEqual(conf.getname('verify.fail_fast'), 'yes')
            self.assertEqual(conf.getname('verify.r_set'), '2,3')
            self.assertIsNone(conf.getname('verify.nonexist'))
            self.assertIsNone(conf.getname('nonexist.key'))
            self.assertIsNone(conf.getname('verify'))
        finally:
            os.chdir(_cwd)

    def test_dump(self):
        conf = partverify.Config()
        conf.load(os.path.join(root_dir, 'test_config_load_repeated'))
        with io.StringIO() as fh:
            conf.dump(fh)
            output = fh.getvalue()
        self.assertIn('[verify]\nfranklin_n_max = 35\n', output)
        self.assertIn('beck_n_max = 12\n', output)
        self.assertIn('[parallel]\nthreads = 1\n', output)

    def test_dump_object(self):
        conf = partverify.Config()
        conf.load(os.path.join(root_dir, 'test_config'))
        obj = conf.dump_object()
        self.assertEqual(obj['verify']['r_set'], [2, 3])

        # a deep copy
        obj['verify']['r_set'].append(5)
        self.assertEqual(conf['verify']['r_set'], [2, 3])

if __name__ == '__main__':
    unittest.main()
