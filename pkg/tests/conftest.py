# anchors the pytest rootdir; tests import the sibling oracles module
