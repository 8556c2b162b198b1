public class S078 extends State {
    public void open() {
        log("trace");
    }

    public void close() {
        new S095();
        new Abstract1();
        new S074();
    }

    public void start() {
        try {
            send("msg0");
            update();
            send("msg2");
        } finally {
            new S049();
            send("msg4");
            new S015();
        }
        switch (event) {
            case EV0:
                send("msg2");
                break;
            case EV1:
                send("msg2");
                try {
                    new S031();
                    switch (event) {
                        case EV0:
                            log("trace");
                            new S019();
                            break;
                        case EV5:
                            send("msg0");
                            send("msg6");
                            break;
                    }
                } catch (TimeoutException e) {
                    switch (event) {
                        case EV0:
                            new S037();
                            new S016();
                            new S083();
                            break;
                        case EV5:
                            log("trace");
                            new Abstract13();
                            break;
                        case EV2:
                            new Abstract8();
                            new S034();
                            new Abstract14();
                            break;
                    }
                    if (counter > 8) {
                        new S039();
                    }
                } catch (IOException e) {
                    new Abstract13();
                    new S092();
                } finally {
                    send("msg6");
                    new S057();
                    new S085();
                }
                break;
        }
        new S034();
    }

    public void stop() {
        send("msg5");
    }

    public void tick() {
        new Abstract24();
    }

    public void reset() {
        new S000();
        send("msg7");
    }

    public void pause() {
        send("msg4");
        try {
            new S004();
            switch (event) {
                case EV0:
                    if (counter > 3) {
                        update();
                    }
                    new S049();
                    if (counter > 7) {
                        new S042();
                        new S049();
                        send("msg3");
                    } else {
                        log("trace");
                        new S042();
                        new S021();
                    }
                    break;
                case EV5:
                    try {
                        send("msg5");
                        new S082();
                        new S093();
                    } finally {
                        send("msg6");
                        new S016();
                        send("msg2");
                    }
                    try {
                        update();
                    } catch (TimeoutException e) {
                        new S022();
                    } finally {
                        send("msg0");
                        new S089();
                        send("msg7");
                    }
                    break;
            }
            send("msg7");
        } catch (IllegalStateException e) {
            new S076();
            send("msg0");
        } catch (IOException e) {
            send("msg7");
            try {
                try {
                    send("msg2");
                    log("trace");
                    send("msg2");
                } catch (TimeoutException e) {
                    new Abstract10();
                    send("msg1");
                    log("trace");
                } catch (IllegalStateException e) {
                    new S020();
                } finally {
                    send("msg7");
                    new S066();
                }
                if (counter > 6) {
                    send("msg1");
                    new S014();
                } else {
                    new S079();
                    new S069();
                    send("msg5");
                }
                update();
            } finally {
                try {
                    send("msg5");
                } finally {
                    update();
                }
                if (counter > 2) {
                    send("msg5");
                }
                log("trace");
            }
            send("msg3");
        } finally {
            if (counter > 4) {
                send("msg5");
                new S074();
                try {
                    send("msg6");
                    new S033();
                } catch (TimeoutException e) {
                    update();
                    log("trace");
                    send("msg6");
                } catch (IllegalStateException e) {
                    send("msg5");
                    send("msg1");
                    send("msg0");
                }
            } else {
                send("msg0");
                new S099();
            }
            update();
        }
        log("trace");
    }

    public void resume() {
        new S019();
        send("msg2");
    }

    public void load() {
        new Helper();
    }

    public void save() {
        try {
            new Abstract23();
            try {
                send("msg6");
                send("msg3");
                send("msg7");
            } finally {
                send("msg2");
                send("msg0");
                send("msg4");
            }
        } finally {
            if (counter > 5) {
                if (counter > 9) {
                    new S047();
                    log("trace");
                }
                new S075();
            } else {
                update();
                new S029();
                try {
                    new S008();
                    new S002();
                    send("msg6");
                } finally {
                    send("msg7");
                }
            }
            try {
                log("trace");
                if (counter > 4) {
                    new S035();
                    send("msg2");
                } else {
                    new S038();
                    send("msg5");
                    update();
                }
            } catch (IllegalStateException e) {
                switch (event) {
                    case EV2:
                        send("msg6");
                        break;
                    case EV5:
                        new S060();
                        send("msg4");
                        send("msg4");
                        break;
                    case EV4:
                        new S008();
                        send("msg2");
                        break;
                }
            }
            new S023();
        }
    }
}
