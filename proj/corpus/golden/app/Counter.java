package app;

import java.util.ArrayList;
import java.util.TreeMap;

public class Counter {
    private ArrayList<Integer> m_aValues = new ArrayList<Integer>();
    private TreeMap<String, Integer> m_oSeen = new TreeMap<String, Integer>();

    public void add(int v) {
        m_aValues.add(v);
    }

    public int first() {
        return m_aValues.get(0);
    }

    public int size() {
        return m_aValues.size();
    }

    public void remember(String key, int v) {
        m_oSeen.put(key, v);
    }

    public int seen(String key) {
        return m_oSeen.get(key);
    }
}
