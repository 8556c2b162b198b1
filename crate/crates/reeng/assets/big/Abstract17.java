public abstract class Abstract17 extends Abstract11 {
}
