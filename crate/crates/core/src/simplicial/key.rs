use std::rc::Rc;

/// Structured names for simplices and diagram elements.  The derived `Ord`
/// is the single source of canonical orbit representatives everywhere: the
/// representative of a class is always its minimal `Key`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Key {
    /// The canonical collapsed point.
    Base,
    Int(i64),
    Str(Rc<str>),
    Pair(Rc<Key>, Rc<Key>),
    List(Rc<[Key]>),
    Tag(u32, Rc<Key>),
}

impl Key {
    pub fn int(v: i64) -> Key {
        Key::Int(v)
    }

    pub fn str(s: &str) -> Key {
        Key::Str(Rc::from(s))
    }

    pub fn pair(a: Key, b: Key) -> Key {
        Key::Pair(Rc::new(a), Rc::new(b))
    }

    pub fn list(items: Vec<Key>) -> Key {
        Key::List(Rc::from(items))
    }

    pub fn tag(t: u32, inner: Key) -> Key {
        Key::Tag(t, Rc::new(inner))
    }

    pub fn is_base(&self) -> bool {
        matches!(self, Key::Base)
    }

    /// Panicking accessors for structured keys; constructions own their
    /// encodings, so shape mismatches are bugs.
    pub fn as_pair(&self) -> (&Key, &Key) {
        match self {
            Key::Pair(a, b) => (a, b),
            _ => panic!("key is not a pair: {self:?}"),
        }
    }

    pub fn as_list(&self) -> &[Key] {
        match self {
            Key::List(items) => items,
            _ => panic!("key is not a list: {self:?}"),
        }
    }

    pub fn as_tag(&self) -> (u32, &Key) {
        match self {
            Key::Tag(t, inner) => (*t, inner),
            _ => panic!("key is not tagged: {self:?}"),
        }
    }

    pub fn as_int(&self) -> i64 {
        match self {
            Key::Int(v) => *v,
            _ => panic!("key is not an int: {self:?}"),
        }
    }
}

impl std::fmt::Debug for Key {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Key::Base => write!(f, "*"),
            Key::Int(v) => write!(f, "{v}"),
            Key::Str(s) => write!(f, "{s}"),
            Key::Pair(a, b) => write!(f, "({a:?},{b:?})"),
            Key::List(items) => {
                write!(f, "[")?;
                for (i, k) in items.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{k:?}")?;
                }
                write!(f, "]")
            }
            Key::Tag(t, inner) => write!(f, "{t}#{inner:?}"),
        }
    }
}
